"""Finite-dimensional matrix representations of the free algebra.

A representation is a free assignment of a square matrix to every letter,
extended to words by multiplication and to polynomials by linearity. The
coproduct drives the tensor product of representations (Kronecker product
for group-like letters, Kronecker sum for primitive ones), the counit gives
the one-dimensional trivial representation, and the antipode turns dual row
vectors back into a left action.

Dual vectors are plain 1 x n matrices; column vectors are n x 1.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError, ParseError
from .freealg import Alphabet, Letter, NCPoly, Word, antipode, coproduct, counit
from .linalg import Matrix, tensor_scheme


def _same_alphabet(a: Alphabet, b: Alphabet):
    if a != b:
        raise DomainError("alphabet mismatch")


class MatRep:
    """Letter-to-matrix assignment, freely extended to the whole algebra."""

    __slots__ = ("alphabet", "dim", "assign")

    def __init__(self, alphabet: Alphabet, dim: int, assign: dict[Letter, Matrix]):
        if dim < 1:
            raise ValueError("dimension must be positive")
        if set(assign) != set(alphabet.letters):
            raise ValueError("assignment must cover exactly the alphabet letters")
        for letter, m in assign.items():
            if m.nrows != dim or m.ncols != dim:
                raise ValueError(
                    f"matrix for {letter.symbol!r} is {m.nrows}x{m.ncols}, expected {dim}x{dim}"
                )
        self.alphabet = alphabet
        self.dim = dim
        self.assign = dict(assign)

    def matrix(self, letter: Letter) -> Matrix:
        return self.assign[letter]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, MatRep)
            and self.alphabet == other.alphabet
            and self.dim == other.dim
            and self.assign == other.assign
        )

    def __repr__(self) -> str:
        return f"MatRep(dim={self.dim} over {self.alphabet.decl()})"

    def to_json_dict(self) -> dict:
        return {
            "alphabet": self.alphabet.decl(),
            "dim": self.dim,
            "assign": {
                l.symbol: self.assign[l].to_strings() for l in self.alphabet.letters
            },
        }

    @classmethod
    def from_json_dict(cls, data) -> "MatRep":
        try:
            alphabet = Alphabet.from_decl(data["alphabet"])
            dim = int(data["dim"])
            assign = {
                l: Matrix.from_strings(data["assign"][l.symbol])
                for l in alphabet.letters
            }
            return cls(alphabet, dim, assign)
        except ParseError:
            raise
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad representation JSON: {exc}") from exc


def eval_word(r: MatRep, w: Word) -> Matrix:
    """rho(w); the empty word maps to the identity."""
    _same_alphabet(r.alphabet, w.alphabet)
    out = Matrix.identity(r.dim)
    for letter in w.letters:
        out = out * r.assign[letter]
    return out


def eval_rep(r: MatRep, p: NCPoly) -> Matrix:
    """rho(p), the unique algebra-morphism extension of the letter matrices."""
    _same_alphabet(r.alphabet, p.alphabet)
    out = Matrix.zeros(r.dim, r.dim)
    for w, c in p.terms.items():
        out = out + eval_word(r, w).scale(c)
    return out


def direct_sum(r1: MatRep, r2: MatRep) -> MatRep:
    """Block-diagonal representation on the sum of the two spaces."""
    _same_alphabet(r1.alphabet, r2.alphabet)
    assign = {
        l: r1.assign[l].direct_sum(r2.assign[l]) for l in r1.alphabet.letters
    }
    return MatRep(r1.alphabet, r1.dim + r2.dim, assign)


def tensor_rep(r1: MatRep, r2: MatRep) -> MatRep:
    """Representation on the tensor product, following the letter scheme:
    Kronecker product on group-like letters, Kronecker sum on primitive ones.
    Basis order is the standard row-major Kronecker order."""
    _same_alphabet(r1.alphabet, r2.alphabet)
    assign = {
        l: tensor_scheme(r1.assign[l], r2.assign[l], l.group_like)
        for l in r1.alphabet.letters
    }
    return MatRep(r1.alphabet, r1.dim * r2.dim, assign)


def trivial_rep(alphabet: Alphabet) -> MatRep:
    """The one-dimensional representation realizing the counit."""
    assign = {
        l: Matrix([[1 if l.group_like else 0]]) for l in alphabet.letters
    }
    return MatRep(alphabet, 1, assign)


def _as_row(psi, dim: int) -> Matrix:
    m = psi if isinstance(psi, Matrix) else Matrix.row_vector(psi)
    if m.nrows != 1 or m.ncols != dim:
        raise DomainError(f"expected a 1x{dim} row vector, got {m.nrows}x{m.ncols}")
    return m


def _as_col(x, dim: int) -> Matrix:
    m = x if isinstance(x, Matrix) else Matrix.col_vector(x)
    if m.ncols != 1 or m.nrows != dim:
        raise DomainError(f"expected a {dim}x1 column vector, got {m.nrows}x{m.ncols}")
    return m


def dual_action(r: MatRep, g: NCPoly, psi) -> Matrix:
    """Left action on the dual through the antipode: psi . rho(S(g))."""
    if r.alphabet.has_group_like:
        raise DomainError("no antipode: group-like letters present")
    _same_alphabet(r.alphabet, g.alphabet)
    row = _as_row(psi, r.dim)
    return row * eval_rep(r, antipode(g))


def pairing_invariance_check(
    r: MatRep, g: NCPoly, psi, x
) -> tuple[Fraction, Fraction]:
    """Audit of the antipode axiom on a representation.

    Returns the two numbers that the axiom forces to coincide: the sum of
    <g_(1) acting on psi, g_(2) acting on x> over the coproduct of g, and
    counit(g) * <psi, x>.
    """
    if r.alphabet.has_group_like:
        raise DomainError("no antipode: group-like letters present")
    _same_alphabet(r.alphabet, g.alphabet)
    row = _as_row(psi, r.dim)
    col = _as_col(x, r.dim)
    lhs = Fraction(0)
    for (u, v), c in coproduct(g).terms.items():
        acted = dual_action(r, NCPoly.from_word(u), row)
        lhs += c * (acted * eval_word(r, v) * col).scalar()
    rhs = counit(g) * (row * col).scalar()
    return lhs, rhs
