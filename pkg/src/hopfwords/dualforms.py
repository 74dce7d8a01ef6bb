"""Linear forms on the free algebra, i.e. series on words.

Two computable presentations are supported: finite support (a polynomial of
coefficients) and recognizable (a linear representation from the sweedler
module). Both expose coeff(word); the convolution product dual to the
coproduct works on either, and its unit is the counit seen as a series.
"""

from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING, Iterator

from .errors import DomainError
from .freealg import Alphabet, NCPoly, Word
from .linalg import Matrix

if TYPE_CHECKING:  # pragma: no cover
    from .sweedler import LinRep


def _same_alphabet(a: Alphabet, b: Alphabet):
    if a != b:
        raise DomainError("alphabet mismatch")


class Series:
    """A linear form on the free algebra, given by a computable coefficient
    function. Concrete classes: FiniteSupportSeries, RecognizableSeries."""

    alphabet: Alphabet

    def coeff(self, w: Word) -> Fraction:
        raise NotImplementedError

    def scale(self, c) -> "Series":
        raise NotImplementedError

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __add__(self, other: "Series") -> "Series":
        _same_alphabet(self.alphabet, other.alphabet)
        if isinstance(self, FiniteSupportSeries) and isinstance(
            other, FiniteSupportSeries
        ):
            return FiniteSupportSeries(self.poly + other.poly)
        from .sweedler import rep_sum

        return RecognizableSeries(rep_sum(_to_linrep(self), _to_linrep(other)))

    def __sub__(self, other: "Series") -> "Series":
        return self + other.scale(-1)


class FiniteSupportSeries(Series):
    """Series with finitely many nonzero coefficients; it is displayed (and
    parsed) as its support polynomial."""

    __slots__ = ("poly", "alphabet")

    def __init__(self, poly: NCPoly):
        self.poly = poly
        self.alphabet = poly.alphabet

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "FiniteSupportSeries":
        return cls(NCPoly.zero(alphabet))

    @classmethod
    def indicator(cls, w: Word, coeff=1) -> "FiniteSupportSeries":
        return cls(NCPoly.from_word(w, coeff))

    @classmethod
    def from_text(cls, alphabet: Alphabet, text: str) -> "FiniteSupportSeries":
        return cls(NCPoly.from_text(alphabet, text))

    @property
    def terms(self) -> dict[Word, Fraction]:
        return self.poly.terms

    def coeff(self, w: Word) -> Fraction:
        _same_alphabet(self.alphabet, w.alphabet)
        return self.poly.coeff(w)

    def scale(self, c) -> "FiniteSupportSeries":
        return FiniteSupportSeries(self.poly.scale(c))

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteSupportSeries) and self.poly == other.poly

    def __str__(self) -> str:
        return str(self.poly)

    def __repr__(self) -> str:
        return f"FiniteSupportSeries({self.poly})"


class RecognizableSeries(Series):
    """Series presented by a linear representation (lambda, mu, gamma)."""

    __slots__ = ("rep", "alphabet")

    def __init__(self, rep: "LinRep"):
        self.rep = rep
        self.alphabet = rep.alphabet

    def coeff(self, w: Word) -> Fraction:
        return self.rep.value(w)

    def scale(self, c) -> "RecognizableSeries":
        from .sweedler import scale_rep

        return RecognizableSeries(scale_rep(self.rep, c))

    def __repr__(self) -> str:
        return f"RecognizableSeries(dim={self.rep.dim} over {self.alphabet.decl()})"


def _to_linrep(f: Series) -> "LinRep":
    from .sweedler import embed_finite

    if isinstance(f, RecognizableSeries):
        return f.rep
    return embed_finite(f)


def pair(f: Series, p: NCPoly) -> Fraction:
    """<f, p> = sum of coefficient(p at w) * f(w)."""
    _same_alphabet(f.alphabet, p.alphabet)
    total = Fraction(0)
    for w, c in p.terms.items():
        total += c * f.coeff(w)
    return total


def _merges(u: Word, v: Word) -> Iterator[Word]:
    """Every word that admits (u, v) among its subword splittings, emitted
    once per splitting: primitive letters interleave freely while group-like
    letters must match pairwise and appear once."""
    alphabet = u.alphabet

    def rec(a, b):
        if not a and not b:
            yield ()
            return
        if a and not a[0].group_like:
            for rest in rec(a[1:], b):
                yield (a[0],) + rest
        if b and not b[0].group_like:
            for rest in rec(a, b[1:]):
                yield (b[0],) + rest
        if a and b and a[0].group_like and b[0].group_like and a[0] == b[0]:
            for rest in rec(a[1:], b[1:]):
                yield (a[0],) + rest

    for letters in rec(u.letters, v.letters):
        yield Word(alphabet, letters)


def convolve(f: Series, h: Series) -> Series:
    """The product dual to the coproduct: (f * h)(w) = <f (x) h, coproduct(w)>.

    Finite-support operands are combined directly (the result is again finite
    support); as soon as a recognizable operand is involved both sides are
    normalized to linear representations and multiplied at that level.
    """
    _same_alphabet(f.alphabet, h.alphabet)
    if isinstance(f, FiniteSupportSeries) and isinstance(h, FiniteSupportSeries):
        acc: dict[Word, Fraction] = {}
        for u, cu in f.terms.items():
            for v, cv in h.terms.items():
                for w in _merges(u, v):
                    acc[w] = acc.get(w, Fraction(0)) + cu * cv
        return FiniteSupportSeries(NCPoly(f.alphabet, acc))
    from .sweedler import conv_rep

    return RecognizableSeries(conv_rep(_to_linrep(f), _to_linrep(h)))


def dual_unit(alphabet: Alphabet) -> RecognizableSeries:
    """The counit as a series: 1 on words of group-like letters (including
    the empty word), 0 elsewhere. Unit of the convolution product; returned
    as a one-state recognizable series."""
    from .sweedler import LinRep

    mu = {l: Matrix([[1 if l.group_like else 0]]) for l in alphabet.letters}
    rep = LinRep(alphabet, 1, Matrix.row_vector([1]), mu, Matrix.col_vector([1]))
    return RecognizableSeries(rep)


def coefficients_agree(f: Series, h: Series, max_len: int) -> bool:
    """Coefficientwise comparison on all words up to max_len."""
    _same_alphabet(f.alphabet, h.alphabet)
    return all(f.coeff(w) == h.coeff(w) for w in f.alphabet.words(max_len))
