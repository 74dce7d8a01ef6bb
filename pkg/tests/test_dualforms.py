from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import geometric_rep
from hopfwords import (
    FiniteSupportSeries,
    NCPoly,
    RecognizableSeries,
    coefficients_agree,
    convolve,
    coproduct_word,
    dual_unit,
    embed_finite,
    pair,
)
from hopfwords.errors import DomainError


def indicator(alphabet, text):
    return FiniteSupportSeries.indicator(alphabet.word(text))


def convolution_oracle(f, h, w):
    """Definitional route: pair f (x) h against the subword coproduct of w."""
    return sum(
        (c * f.coeff(u) * h.coeff(v) for (u, v), c in coproduct_word(w).terms.items()),
        Fraction(0),
    )


# ---------------------------------------------------------------------------
# pairing


def test_pair_picks_out_coefficients(ab):
    f = indicator(ab, "a")
    assert pair(f, NCPoly.from_text(ab, "3*a + b")) == 3
    assert pair(f, NCPoly.zero(ab)) == 0


def test_pair_with_recognizable(single):
    geo = RecognizableSeries(geometric_rep(single, 2))
    assert pair(geo, NCPoly.from_text(single, "aa")) == 4
    assert pair(geo, NCPoly.from_text(single, "aa - 2*a + 1/2")) == Fraction(1, 2)


def test_pair_alphabet_mismatch(ab, single):
    with pytest.raises(DomainError):
        pair(indicator(ab, "a"), NCPoly.from_text(single, "a"))


# ---------------------------------------------------------------------------
# convolution, finite support


def test_convolve_single_letters_shuffle(ab):
    out = convolve(indicator(ab, "a"), indicator(ab, "b"))
    assert out == FiniteSupportSeries.from_text(ab, "ab + ba")


def test_convolve_repeated_letter_doubles(ab):
    out = convolve(indicator(ab, "a"), indicator(ab, "a"))
    assert out == FiniteSupportSeries.from_text(ab, "2*aa")


def test_convolve_unit_indicator_is_unit_when_all_primitive(ab):
    f = FiniteSupportSeries.from_text(ab, "2*ab - b + 1")
    one = indicator(ab, "1")
    assert convolve(one, f) == f
    assert convolve(f, one) == f


def test_convolve_group_like_synchronizes(grouponly):
    xg = indicator(grouponly, "g")
    assert convolve(xg, xg) == xg
    # a group-like letter cannot pair against the empty word
    assert convolve(xg, indicator(grouponly, "1")) == FiniteSupportSeries.zero(
        grouponly
    )


def test_convolve_longer_words_against_oracle(mixed):
    words = list(mixed.words(2))
    for u in words:
        for v in words:
            out = convolve(
                FiniteSupportSeries.indicator(u), FiniteSupportSeries.indicator(v)
            )
            for w in mixed.words(4):
                assert out.coeff(w) == convolution_oracle(
                    FiniteSupportSeries.indicator(u),
                    FiniteSupportSeries.indicator(v),
                    w,
                )


series_terms = st.lists(
    st.tuples(
        st.text(alphabet="ag", min_size=0, max_size=2).map(lambda s: s or "1"),
        st.integers(min_value=-3, max_value=3),
    ),
    min_size=0,
    max_size=3,
)


@given(series_terms, series_terms)
@settings(max_examples=40, deadline=None)
def test_convolve_matches_oracle_on_random_series(ts1, ts2):
    from hopfwords import Alphabet

    alph = Alphabet.from_decl("a:L,g:G")
    f = FiniteSupportSeries(NCPoly(alph, {alph.word(w): c for w, c in ts1}))
    h = FiniteSupportSeries(NCPoly(alph, {alph.word(w): c for w, c in ts2}))
    out = convolve(f, h)
    for w in alph.words(4):
        assert out.coeff(w) == convolution_oracle(f, h, w)


def test_pairing_coproduct_adjunction(mixed):
    f = FiniteSupportSeries.from_text(mixed, "2*ag - b + 1")
    h = FiniteSupportSeries.from_text(mixed, "g + 3*ba")
    fh = convolve(f, h)
    for w in mixed.words(5):
        assert pair(fh, NCPoly.from_word(w)) == convolution_oracle(f, h, w)


def test_commutativity_on_primitive_alphabet(ab):
    f = FiniteSupportSeries.from_text(ab, "ab - 2*b")
    h = FiniteSupportSeries.from_text(ab, "a + 1/2*ba")
    lhs = convolve(f, h)
    rhs = convolve(h, f)
    assert lhs == rhs


def test_dual_associativity_indicators(mixed):
    indicators = [FiniteSupportSeries.indicator(w) for w in mixed.words(2)]
    targets = list(mixed.words(4))
    for fu in indicators[:6]:
        for fv in indicators[:6]:
            uv = convolve(fu, fv)
            for fw in indicators[:6]:
                lhs = convolve(uv, fw)
                rhs = convolve(fu, convolve(fv, fw))
                for t in targets:
                    assert lhs.coeff(t) == rhs.coeff(t)


# ---------------------------------------------------------------------------
# convolution with recognizable operands


def test_mixed_variant_convolution_agrees_with_formula(ab):
    geo = RecognizableSeries(geometric_rep(ab, 2))
    f = FiniteSupportSeries.from_text(ab, "ab - b")
    out = convolve(f, geo)
    assert isinstance(out, RecognizableSeries)
    for w in ab.words(5):
        assert out.coeff(w) == convolution_oracle(f, geo, w)


def test_recognizable_convolution_agrees_with_formula(mixed):
    g2 = RecognizableSeries(geometric_rep(mixed, 2))
    g3 = RecognizableSeries(geometric_rep(mixed, 3))
    out = convolve(g2, g3)
    for w in mixed.words(4):
        assert out.coeff(w) == convolution_oracle(g2, g3, w)


# ---------------------------------------------------------------------------
# dual unit


def test_dual_unit_is_unit_indicator_when_no_group_like(single):
    e = dual_unit(single)
    chi1 = indicator(single, "1")
    assert coefficients_agree(e, chi1, 5)


def test_dual_unit_on_group_like_words(grouponly):
    e = dual_unit(grouponly)
    assert e.coeff(grouponly.word("ggg")) == 1
    assert e.coeff(grouponly.word("1")) == 1


def test_dual_unit_law_both_sides(mixed):
    e = dual_unit(mixed)
    finite = FiniteSupportSeries.from_text(mixed, "2*ag - b + 1/3")
    recog = RecognizableSeries(geometric_rep(mixed, 2))
    for f in (finite, recog):
        left = convolve(e, f)
        right = convolve(f, e)
        for w in mixed.words(4):
            assert left.coeff(w) == f.coeff(w)
            assert right.coeff(w) == f.coeff(w)


# ---------------------------------------------------------------------------
# series vector-space structure


def test_series_addition_and_scaling(ab):
    f = FiniteSupportSeries.from_text(ab, "ab - b")
    h = FiniteSupportSeries.from_text(ab, "b + 1")
    assert f + h == FiniteSupportSeries.from_text(ab, "ab + 1")
    assert f.scale(Fraction(1, 2)) == FiniteSupportSeries.from_text(ab, "1/2*ab - 1/2*b")
    assert 2 * f == FiniteSupportSeries.from_text(ab, "2*ab - 2*b")


def test_series_addition_with_recognizable(ab):
    geo = RecognizableSeries(geometric_rep(ab, 2))
    f = FiniteSupportSeries.from_text(ab, "ab - b")
    total = geo + f
    assert isinstance(total, RecognizableSeries)
    for w in ab.words(4):
        assert total.coeff(w) == geo.coeff(w) + f.coeff(w)
    diff = total - f
    for w in ab.words(4):
        assert diff.coeff(w) == geo.coeff(w)


def test_finite_series_displayed_as_polynomial(ab):
    f = FiniteSupportSeries.from_text(ab, "1 + 3*ab")
    assert str(f) == "3*ab + 1"


def test_embedding_matches_finite_series(ab):
    f = FiniteSupportSeries.from_text(ab, "2*a - b")
    rep = embed_finite(f)
    for w in ab.words(3):
        assert rep.value(w) == f.coeff(w)
