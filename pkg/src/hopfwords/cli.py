"""Command-line front end.

Every operation of the library sits behind a subcommand with deterministic
text/JSON output, suitable for scripting and byte-exact golden tests.

Exit codes: 0 success, 1 parse/usage error, 2 domain error, 3 inconclusive
(learning rank not stabilized), 4 invariant check found a counterexample.

Polynomial operands use the text grammar ("3*ab - 1/2*ba + 1"); series
operands are either polynomial text (finite support) or a linear
representation in JSON, inline or as a file path. Inline operands of 1024
bytes or more must be passed as files.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .dualforms import (
    FiniteSupportSeries,
    RecognizableSeries,
    Series,
    convolve,
    pair,
)
from .errors import DomainError, InconclusiveError, ParseError
from .freealg import (
    Alphabet,
    NCPoly,
    Tensor2,
    Word,
    antipode,
    coassoc_lhs,
    coassoc_rhs,
    coproduct,
    coproduct_word,
    counit,
    poly_mul,
    splittings,
)
from .linalg import Matrix
from .rep import MatRep, direct_sum, eval_rep, tensor_rep
from .sweedler import (
    LinRep,
    behavior_table,
    conv_rep,
    embed_finite,
    hankel,
    hankel_rank,
    learn,
    split,
    transpose_antipode,
)

EXIT_OK = 0
EXIT_PARSE = 1
EXIT_DOMAIN = 2
EXIT_INCONCLUSIVE = 3
EXIT_COUNTEREXAMPLE = 4

_INLINE_LIMIT = 1024
_MAXLEN_CAP = 7


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _add_common(p: argparse.ArgumentParser):
    p.add_argument(
        "--alphabet",
        metavar="DECL",
        help="alphabet declaration, e.g. 'a:L,b:L,g:G' (required for text operands)",
    )
    p.add_argument(
        "--format",
        choices=("text", "json"),
        default="text",
        help="output format (default: text)",
    )


def build_parser() -> _Parser:
    parser = _Parser(prog="hopfwords", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="SUBCOMMAND")

    def cmd(name, help_, **kwargs):
        p = sub.add_parser(name, help=help_, **kwargs)
        _add_common(p)
        return p

    p = cmd("coprod", "coproduct of a polynomial, as a sum of word pairs")
    p.add_argument("poly")

    p = cmd("mul", "concatenation product of two polynomials")
    p.add_argument("poly")
    p.add_argument("poly2")

    p = cmd("counit", "counit of a polynomial (a rational)")
    p.add_argument("poly")

    p = cmd("antipode", "antipode of a polynomial (all letters must be primitive)")
    p.add_argument("poly")

    p = cmd("pair", "pairing <series, polynomial>")
    p.add_argument("--series", action="append", default=[], metavar="S")
    p.add_argument("poly")

    p = cmd("conv", "convolution product of two series")
    p.add_argument("--series", action="append", default=[], metavar="S")

    p = cmd("tensor", "tensor product of two matrix representations")
    p.add_argument("--rep", action="append", default=[], metavar="R")

    p = cmd("dsum", "direct sum of two matrix representations")
    p.add_argument("--rep", action="append", default=[], metavar="R")

    p = cmd("eval", "evaluate a matrix representation on a polynomial")
    p.add_argument("--rep", action="append", default=[], metavar="R")
    p.add_argument("poly")

    p = cmd("hankel", "finite Hankel window of a series")
    p.add_argument("--series", action="append", default=[], metavar="S")
    p.add_argument("--hankel", metavar="P,S", help="prefix/suffix length bounds")

    p = cmd("rank", "exact rank of a Hankel window")
    p.add_argument("--series", action="append", default=[], metavar="S")
    p.add_argument("--hankel", metavar="P,S", help="prefix/suffix length bounds")

    p = cmd("learn", "learn a minimal linear representation from a series")
    p.add_argument("--series", action="append", default=[], metavar="S")
    p.add_argument("--explore", type=int, metavar="L", help="exploration length")

    p = cmd("split", "rank-one splitting f(xy) = sum g_i(x) h_i(y) of a series")
    p.add_argument("--series", action="append", default=[], metavar="S")

    p = cmd("dualS", "transposed antipode of a recognizable series")
    p.add_argument("--series", action="append", default=[], metavar="S")

    for name, help_ in (
        ("check-coassoc", "verify coassociativity on all words up to --maxlen"),
        ("check-antipode", "verify the antipode identity on all words up to --maxlen"),
        (
            "check-dual-assoc",
            "verify associativity of the convolution of indicator series "
            "(indicators of words up to length 2, targets up to --maxlen)",
        ),
        (
            "check-conv-oracle",
            "verify the representation-level convolution against the "
            "subword-splitting formula on reference series, words up to --maxlen",
        ),
    ):
        p = cmd(name, help_)
        p.add_argument("--maxlen", type=int, metavar="N", help="word length bound (<= 7)")

    return parser


# ---------------------------------------------------------------------------
# operand loading


def _read_operand(arg: str) -> str:
    if os.path.isfile(arg):
        try:
            with open(arg, encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read operand file {arg!r}: {exc}") from exc
    if len(arg.encode()) >= _INLINE_LIMIT:
        raise ParseError("inline operand is 1024 bytes or larger; pass it as a file path")
    return arg


def _need_alphabet(args) -> Alphabet:
    if not args.alphabet:
        raise ParseError("--alphabet is required for text operands")
    return Alphabet.from_decl(args.alphabet)


def _load_poly(args, raw: str, alphabet: Alphabet | None = None) -> NCPoly:
    content = _read_operand(raw).strip()
    return NCPoly.from_text(alphabet or _need_alphabet(args), content)


def _load_series(args, raw: str) -> Series:
    content = _read_operand(raw).strip()
    if content.startswith("{"):
        try:
            data = json.loads(content)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON operand: {exc}") from exc
        rep = LinRep.from_json_dict(data)
        if args.alphabet and Alphabet.from_decl(args.alphabet) != rep.alphabet:
            raise DomainError("series alphabet differs from --alphabet declaration")
        return RecognizableSeries(rep)
    return FiniteSupportSeries.from_text(_need_alphabet(args), content)


def _series_args(args, count: int) -> list[Series]:
    got = getattr(args, "series", [])
    if len(got) != count:
        raise ParseError(f"expected exactly {count} --series operand(s), got {len(got)}")
    return [_load_series(args, raw) for raw in got]


def _load_linrep(args) -> LinRep:
    (f,) = _series_args(args, 1)
    if isinstance(f, FiniteSupportSeries):
        return embed_finite(f)
    return f.rep


def _rep_args(args, count: int) -> list[MatRep]:
    got = getattr(args, "rep", [])
    if len(got) != count:
        raise ParseError(f"expected exactly {count} --rep operand(s), got {len(got)}")
    reps = []
    for raw in got:
        content = _read_operand(raw).strip()
        if not content.startswith("{"):
            raise ParseError("--rep operand must be representation JSON")
        try:
            data = json.loads(content)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON operand: {exc}") from exc
        rep = MatRep.from_json_dict(data)
        if args.alphabet and Alphabet.from_decl(args.alphabet) != rep.alphabet:
            raise DomainError("representation alphabet differs from --alphabet declaration")
        reps.append(rep)
    return reps


def _window(args) -> tuple[int, int]:
    if not getattr(args, "hankel", None):
        raise ParseError("--hankel P,S is required")
    try:
        p, s = (int(x) for x in args.hankel.split(","))
    except ValueError:
        raise ParseError(f"bad --hankel value {args.hankel!r}: expected two integers 'p,s'")
    if p < 0 or s < 0:
        raise ParseError(f"bad --hankel value {args.hankel!r}: expected two nonnegative integers")
    return p, s


def _maxlen(args) -> int:
    n = getattr(args, "maxlen", None)
    if n is None:
        raise ParseError("--maxlen N is required")
    if n < 0 or n > _MAXLEN_CAP:
        raise ParseError(f"--maxlen out of range: {n} (allowed 0..{_MAXLEN_CAP})")
    return n


# ---------------------------------------------------------------------------
# output formatting


def _finish(args, text: str, json_obj) -> tuple[str, int]:
    if args.format == "json":
        return json.dumps(json_obj) + "\n", EXIT_OK
    return text + "\n", EXIT_OK


def _poly_json(p: NCPoly):
    return {
        "alphabet": p.alphabet.decl(),
        "terms": [[str(w), str(c)] for w, c in p.terms.items()],
    }


def _out_poly(args, p: NCPoly):
    return _finish(args, str(p), _poly_json(p))


def _out_tensor2(args, t: Tensor2):
    obj = {
        "alphabet": t.alphabet.decl(),
        "terms": [[str(u), str(v), str(c)] for (u, v), c in t.terms.items()],
    }
    return _finish(args, str(t), obj)


def _out_rational(args, c: Fraction):
    return _finish(args, str(c), {"value": str(c)})


def _out_matrix(args, m: Matrix):
    return _finish(args, json.dumps(m.to_strings()), {"matrix": m.to_strings()})


def _out_linrep(args, rep: LinRep):
    obj = rep.to_json_dict()
    return _finish(args, json.dumps(obj), obj)


def _out_matrep(args, rep: MatRep):
    obj = rep.to_json_dict()
    return _finish(args, json.dumps(obj), obj)


def _out_check(args, name: str, maxlen: int, checked: int, counterexample=None):
    status = "OK" if counterexample is None else "FAIL"
    obj = {
        "check": name,
        "maxlen": maxlen,
        "status": status,
        "checked": checked,
        "counterexample": None if counterexample is None else str(counterexample),
    }
    if counterexample is None:
        text = f"{name}: OK ({checked} checks, maxlen={maxlen})"
        code = EXIT_OK
    else:
        text = f"{name}: FAIL at {counterexample} ({checked} checks passed, maxlen={maxlen})"
        code = EXIT_COUNTEREXAMPLE
    body = json.dumps(obj) + "\n" if args.format == "json" else text + "\n"
    return body, code


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_coprod(args):
    return _out_tensor2(args, coproduct(_load_poly(args, args.poly)))


def _cmd_mul(args):
    alph = _need_alphabet(args)
    p = _load_poly(args, args.poly, alph)
    q = _load_poly(args, args.poly2, alph)
    return _out_poly(args, poly_mul(p, q))


def _cmd_counit(args):
    return _out_rational(args, counit(_load_poly(args, args.poly)))


def _cmd_antipode(args):
    return _out_poly(args, antipode(_load_poly(args, args.poly)))


def _cmd_pair(args):
    (f,) = _series_args(args, 1)
    p = _load_poly(args, args.poly, f.alphabet)
    return _out_rational(args, pair(f, p))


def _cmd_conv(args):
    f, h = _series_args(args, 2)
    result = convolve(f, h)
    if isinstance(result, FiniteSupportSeries):
        return _out_poly(args, result.poly)
    return _out_linrep(args, result.rep)


def _cmd_tensor(args):
    r1, r2 = _rep_args(args, 2)
    return _out_matrep(args, tensor_rep(r1, r2))


def _cmd_dsum(args):
    r1, r2 = _rep_args(args, 2)
    return _out_matrep(args, direct_sum(r1, r2))


def _cmd_eval(args):
    (r,) = _rep_args(args, 1)
    p = _load_poly(args, args.poly, r.alphabet)
    return _out_matrix(args, eval_rep(r, p))


def _cmd_hankel(args):
    (f,) = _series_args(args, 1)
    p, s = _window(args)
    slice_ = hankel(f, p, s)
    obj = {
        "rows": [str(w) for w in slice_.rows],
        "cols": [str(w) for w in slice_.cols],
        "entries": slice_.entries.to_strings(),
    }
    return _finish(args, json.dumps(obj), obj)


def _cmd_rank(args):
    (f,) = _series_args(args, 1)
    p, s = _window(args)
    r = hankel_rank(f, p, s)
    return _finish(args, str(r), {"rank": r})


def _cmd_learn(args):
    (f,) = _series_args(args, 1)
    explore = getattr(args, "explore", None)
    if explore is None or explore < 0:
        raise ParseError("--explore L (nonnegative) is required")
    return _out_linrep(args, learn(f, explore))


def _cmd_split(args):
    rep = _load_linrep(args)
    pairs = split(rep)
    obj = {
        "pairs": [
            {"g": g.rep.to_json_dict(), "h": h.rep.to_json_dict()} for g, h in pairs
        ]
    }
    return _finish(args, json.dumps(obj), obj)


def _cmd_dualS(args):
    rep = _load_linrep(args)
    return _out_linrep(args, transpose_antipode(rep))


def _cmd_check_coassoc(args):
    alph = _need_alphabet(args)
    maxlen = _maxlen(args)
    checked = 0
    for w in alph.words(maxlen):
        p = NCPoly.from_word(w)
        if coassoc_lhs(p) != coassoc_rhs(p):
            return _out_check(args, "coassoc", maxlen, checked, w)
        checked += 1
    return _out_check(args, "coassoc", maxlen, checked)


def _cmd_check_antipode(args):
    alph = _need_alphabet(args)
    if alph.has_group_like:
        raise DomainError("no antipode: group-like letters present")
    maxlen = _maxlen(args)
    checked = 0
    for w in alph.words(maxlen):
        wp = NCPoly.from_word(w)
        target = NCPoly.one(alph).scale(counit(wp))
        left = NCPoly.zero(alph)
        right = NCPoly.zero(alph)
        for (u, v), c in coproduct_word(w).terms.items():
            up, vp = NCPoly.from_word(u), NCPoly.from_word(v)
            left = left + poly_mul(antipode(up), vp).scale(c)
            right = right + poly_mul(up, antipode(vp)).scale(c)
        if left != target or right != target:
            return _out_check(args, "antipode", maxlen, checked, w)
        checked += 1
    return _out_check(args, "antipode", maxlen, checked)


def _cmd_check_dual_assoc(args):
    alph = _need_alphabet(args)
    maxlen = _maxlen(args)

    def trimmed(f: FiniteSupportSeries):
        return {w: c for w, c in f.terms.items() if len(w) <= maxlen}

    indicators = [(w, FiniteSupportSeries.indicator(w)) for w in alph.words(2)]
    checked = 0
    for wu, fu in indicators:
        for wv, fv in indicators:
            uv = convolve(fu, fv)
            for ww, fw in indicators:
                lhs = convolve(uv, fw)
                rhs = convolve(fu, convolve(fv, fw))
                if trimmed(lhs) != trimmed(rhs):
                    return _out_check(
                        args, "dual-assoc", maxlen, checked, f"({wu},{wv},{ww})"
                    )
                checked += 1
    return _out_check(args, "dual-assoc", maxlen, checked)


def _cmd_check_conv_oracle(args):
    alph = _need_alphabet(args)
    maxlen = _maxlen(args)

    def geometric(c):
        mu = {l: Matrix([[c]]) for l in alph.letters}
        return LinRep(alph, 1, Matrix.row_vector([1]), mu, Matrix.col_vector([1]))

    refs = [("geometric(2)", geometric(2)), ("geometric(3)", geometric(3))]
    refs.append(
        ("indicator(1)", embed_finite(FiniteSupportSeries.indicator(alph.unit_word())))
    )
    for letter in alph.sorted_letters:
        w = Word(alph, (letter,))
        refs.append((f"indicator({letter.symbol})", embed_finite(FiniteSupportSeries.indicator(w))))

    tables = {name: behavior_table(rep, maxlen) for name, rep in refs}
    words = list(alph.words(maxlen))
    checked = 0
    for n1, r1 in refs:
        for n2, r2 in refs:
            table = behavior_table(conv_rep(r1, r2), maxlen)
            t1, t2 = tables[n1], tables[n2]
            for w in words:
                expected = sum(
                    (t1[u] * t2[v] for u, v in splittings(w)), Fraction(0)
                )
                if table[w] != expected:
                    return _out_check(
                        args, "conv-oracle", maxlen, checked, f"{n1}*{n2} at {w}"
                    )
                checked += 1
    return _out_check(args, "conv-oracle", maxlen, checked)


_HANDLERS = {
    "coprod": _cmd_coprod,
    "mul": _cmd_mul,
    "counit": _cmd_counit,
    "antipode": _cmd_antipode,
    "pair": _cmd_pair,
    "conv": _cmd_conv,
    "tensor": _cmd_tensor,
    "dsum": _cmd_dsum,
    "eval": _cmd_eval,
    "hankel": _cmd_hankel,
    "rank": _cmd_rank,
    "learn": _cmd_learn,
    "split": _cmd_split,
    "dualS": _cmd_dualS,
    "check-coassoc": _cmd_check_coassoc,
    "check-antipode": _cmd_check_antipode,
    "check-dual-assoc": _cmd_check_dual_assoc,
    "check-conv-oracle": _cmd_check_conv_oracle,
}


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, code = _HANDLERS[args.command](args)
    except ParseError as exc:
        print(f"hopfwords: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"hopfwords: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except InconclusiveError as exc:
        print(f"hopfwords: inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    sys.stdout.write(out)
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
