"""The free algebra over a partitioned alphabet.

Words under concatenation, noncommutative polynomials with exact rational
coefficients, the subword coproduct driven by the group-like/primitive
partition of the letters, the counit, and the antipode (which exists exactly
when every letter is primitive).

All values are immutable after construction and every operation is a pure
function of its inputs, so everything here is safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import product as _cartesian
from typing import Iterator, Mapping, Sequence

from .errors import DomainError, ParseError


class LetterKind(Enum):
    GROUP_LIKE = "G"
    PRIMITIVE = "L"


# characters that collide with the expression grammar and cannot be letters
_RESERVED = set("0123456789+-*/():,⊗")


@dataclass(frozen=True)
class Letter:
    """A single alphabet symbol together with its coproduct tag."""

    symbol: str
    kind: LetterKind

    def __post_init__(self):
        s = self.symbol
        if len(s) != 1 or not (33 <= ord(s) <= 126):
            raise ParseError(
                f"letter symbol must be a single printable ASCII character, got {s!r}"
            )
        if s in _RESERVED:
            raise ParseError(f"letter symbol {s!r} collides with the expression grammar")

    @property
    def group_like(self) -> bool:
        return self.kind is LetterKind.GROUP_LIKE


@dataclass(frozen=True)
class Alphabet:
    """Ordered finite set of tagged letters; the G/L partition is the tags."""

    letters: tuple[Letter, ...]

    def __post_init__(self):
        seen = set()
        for letter in self.letters:
            if letter.symbol in seen:
                raise ParseError(f"duplicate letter {letter.symbol!r} in alphabet")
            seen.add(letter.symbol)

    @classmethod
    def from_decl(cls, decl: str) -> "Alphabet":
        """Parse a declaration string such as "a:L,b:L,g:G"."""
        letters = []
        for pos, entry in enumerate(decl.split(",")):
            item = entry.strip()
            parts = item.split(":")
            if len(parts) != 2 or not parts[0] or parts[1] not in ("G", "L"):
                raise ParseError(
                    f"bad alphabet entry {item!r} at position {pos}: expected 'symbol:G' or 'symbol:L'"
                )
            letters.append(Letter(parts[0], LetterKind(parts[1])))
        return cls(tuple(letters))

    def decl(self) -> str:
        return ",".join(f"{l.symbol}:{l.kind.value}" for l in self.letters)

    def find(self, symbol: str):
        for letter in self.letters:
            if letter.symbol == symbol:
                return letter
        return None

    @property
    def sorted_letters(self) -> tuple[Letter, ...]:
        """Letters in ascending symbol-code order; used for word enumeration."""
        return tuple(sorted(self.letters, key=lambda l: l.symbol))

    @property
    def group_like(self) -> tuple[Letter, ...]:
        return tuple(l for l in self.letters if l.group_like)

    @property
    def primitive(self) -> tuple[Letter, ...]:
        return tuple(l for l in self.letters if not l.group_like)

    @property
    def has_group_like(self) -> bool:
        return any(l.group_like for l in self.letters)

    def unit_word(self) -> "Word":
        return Word(self, ())

    def word(self, text: str) -> "Word":
        """Parse a word: "1" is the empty word, otherwise one letter per character."""
        if text == "1":
            return self.unit_word()
        letters = []
        for i, ch in enumerate(text):
            letter = self.find(ch)
            if letter is None:
                raise ParseError(f"unknown letter {ch!r} at position {i} in {text!r}")
            letters.append(letter)
        return Word(self, tuple(letters))

    def words(self, max_len: int) -> Iterator["Word"]:
        """All words of length <= max_len in ascending shortlex order."""
        base = self.sorted_letters
        for n in range(max_len + 1):
            for combo in _cartesian(base, repeat=n):
                yield Word(self, combo)


@dataclass(frozen=True)
class Word:
    """A finite string of letters; the empty word is the multiplicative unit."""

    alphabet: Alphabet
    letters: tuple[Letter, ...]

    def __post_init__(self):
        for letter in self.letters:
            if letter not in self.alphabet.letters:
                raise DomainError(f"letter {letter.symbol!r} is not in the alphabet")

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def is_unit(self) -> bool:
        return not self.letters

    def symbols(self) -> str:
        return "".join(l.symbol for l in self.letters)

    def __str__(self) -> str:
        return self.symbols() if self.letters else "1"

    def __repr__(self) -> str:
        return f"Word({self})"

    def reverse(self) -> "Word":
        return Word(self.alphabet, self.letters[::-1])

    def subword(self, positions: Sequence[int]) -> "Word":
        """Letters at the given (increasing) positions, in order."""
        return Word(self.alphabet, tuple(self.letters[i] for i in positions))


def shortlex_key(w: Word):
    """Ascending enumeration order: by length, then by symbols."""
    return (len(w.letters), tuple(l.symbol for l in w.letters))


def display_key(w: Word):
    """Canonical term order: length descending, then symbols ascending."""
    return (-len(w.letters), tuple(l.symbol for l in w.letters))


def _same_alphabet(a: Alphabet, b: Alphabet):
    if a != b:
        raise DomainError("alphabet mismatch")


def _bump(acc: dict, key, value: Fraction):
    acc[key] = acc.get(key, Fraction(0)) + value


def _canonical(alphabet: Alphabet, terms, component_words) -> dict:
    """Validate, merge and sort terms; drop zero coefficients."""
    acc: dict = {}
    items = terms.items() if isinstance(terms, Mapping) else terms
    for key, c in items:
        for w in component_words(key):
            _same_alphabet(w.alphabet, alphabet)
        c = Fraction(c)
        if c:
            _bump(acc, key, c)
    clean = {k: v for k, v in acc.items() if v}
    def sort_key(key):
        out = []
        for w in component_words(key):
            out.extend(display_key(w))
        return tuple(out)
    return dict(sorted(clean.items(), key=lambda kv: sort_key(kv[0])))


def _term_text(c: Fraction, body: str) -> str:
    mag = abs(c)
    return body if mag == 1 else f"{mag}*{body}"


def _render_terms(items) -> str:
    parts = []
    for c, body in items:
        text = _term_text(c, body)
        if not parts:
            parts.append(text if c > 0 else "-" + text)
        else:
            parts.append(("+ " if c > 0 else "- ") + text)
    return " ".join(parts)


class NCPoly:
    """Noncommutative polynomial: a finite Q-linear combination of words.

    Terms are kept without zero coefficients and ordered by word length
    descending then symbols ascending; printing and iteration follow that
    order, so output is deterministic and parse(str(p)) == p.
    """

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms=()):
        self.alphabet = alphabet
        self.terms: dict[Word, Fraction] = _canonical(alphabet, terms, lambda w: (w,))

    @classmethod
    def zero(cls, alphabet: Alphabet) -> "NCPoly":
        return cls(alphabet)

    @classmethod
    def one(cls, alphabet: Alphabet) -> "NCPoly":
        return cls(alphabet, {alphabet.unit_word(): 1})

    @classmethod
    def from_word(cls, w: Word, coeff=1) -> "NCPoly":
        return cls(w.alphabet, {w: coeff})

    @classmethod
    def from_text(cls, alphabet: Alphabet, text: str) -> "NCPoly":
        cur = _Cursor(text)
        acc: dict = {}
        for c, w in _parse_sum(cur, lambda c: _parse_poly_term(c, alphabet)):
            _bump(acc, w, c)
        return cls(alphabet, acc)

    def coeff(self, w: Word) -> Fraction:
        return self.terms.get(w, Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, NCPoly)
            and self.alphabet == other.alphabet
            and self.terms == other.terms
        )

    def __add__(self, other: "NCPoly") -> "NCPoly":
        _same_alphabet(self.alphabet, other.alphabet)
        acc = dict(self.terms)
        for w, c in other.terms.items():
            _bump(acc, w, c)
        return NCPoly(self.alphabet, acc)

    def __sub__(self, other: "NCPoly") -> "NCPoly":
        return self + (-other)

    def __neg__(self) -> "NCPoly":
        return NCPoly(self.alphabet, {w: -c for w, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, NCPoly):
            return poly_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "NCPoly":
        c = Fraction(c)
        return NCPoly(self.alphabet, {w: c * v for w, v in self.terms.items()})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return _render_terms((c, str(w)) for w, c in self.terms.items())

    def __repr__(self) -> str:
        return f"NCPoly({self})"


class Tensor2:
    """Finite Q-linear combination of word pairs: an element of A (x) A."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms=()):
        self.alphabet = alphabet
        self.terms: dict[tuple[Word, Word], Fraction] = _canonical(
            alphabet, terms, lambda k: k
        )

    @classmethod
    def one(cls, alphabet: Alphabet) -> "Tensor2":
        u = alphabet.unit_word()
        return cls(alphabet, {(u, u): 1})

    @classmethod
    def from_text(cls, alphabet: Alphabet, text: str) -> "Tensor2":
        cur = _Cursor(text)
        acc: dict = {}
        for c, key in _parse_sum(cur, lambda c: _parse_tensor_term(c, alphabet, 2)):
            _bump(acc, key, c)
        return cls(alphabet, acc)

    def coeff(self, u: Word, v: Word) -> Fraction:
        return self.terms.get((u, v), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Tensor2)
            and self.alphabet == other.alphabet
            and self.terms == other.terms
        )

    def __add__(self, other: "Tensor2") -> "Tensor2":
        _same_alphabet(self.alphabet, other.alphabet)
        acc = dict(self.terms)
        for k, c in other.terms.items():
            _bump(acc, k, c)
        return Tensor2(self.alphabet, acc)

    def __sub__(self, other: "Tensor2") -> "Tensor2":
        return self + other.scale(-1)

    def __mul__(self, other):
        if isinstance(other, Tensor2):
            return tensor2_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c) -> "Tensor2":
        c = Fraction(c)
        return Tensor2(self.alphabet, {k: c * v for k, v in self.terms.items()})

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return _render_terms(
            (c, f"{u}(x){v}") for (u, v), c in self.terms.items()
        )

    def __repr__(self) -> str:
        return f"Tensor2({self})"


class Tensor3:
    """Finite Q-linear combination of word triples: an element of A (x) A (x) A."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms=()):
        self.alphabet = alphabet
        self.terms: dict[tuple[Word, Word, Word], Fraction] = _canonical(
            alphabet, terms, lambda k: k
        )

    def coeff(self, u: Word, v: Word, w: Word) -> Fraction:
        return self.terms.get((u, v, w), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Tensor3)
            and self.alphabet == other.alphabet
            and self.terms == other.terms
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return _render_terms(
            (c, f"{u}(x){v}(x){w}") for (u, v, w), c in self.terms.items()
        )

    def __repr__(self) -> str:
        return f"Tensor3({self})"


# ---------------------------------------------------------------------------
# operations


def conc(u: Word, v: Word) -> Word:
    """Juxtaposition uv."""
    _same_alphabet(u.alphabet, v.alphabet)
    return Word(u.alphabet, u.letters + v.letters)


def poly_mul(p: NCPoly, q: NCPoly) -> NCPoly:
    """Bilinear extension of concatenation."""
    _same_alphabet(p.alphabet, q.alphabet)
    acc: dict = {}
    for u, c in p.terms.items():
        for v, d in q.terms.items():
            _bump(acc, conc(u, v), c * d)
    return NCPoly(p.alphabet, acc)


def splittings(w: Word) -> Iterator[tuple[Word, Word]]:
    """All 2^k two-sided subword splittings of w, k the number of primitive
    positions. Group-like positions are kept on both sides; repeated letters
    make repeated pairs, one per splitting."""
    idx_g = [i for i, l in enumerate(w.letters) if l.group_like]
    idx_l = [i for i, l in enumerate(w.letters) if not l.group_like]
    k = len(idx_l)
    for mask in range((1 << k) - 1, -1, -1):
        left = sorted(idx_g + [idx_l[i] for i in range(k) if mask >> i & 1])
        right = sorted(idx_g + [idx_l[i] for i in range(k) if not mask >> i & 1])
        yield w.subword(left), w.subword(right)


def coproduct_word(w: Word) -> Tensor2:
    """Coproduct of a single word by the subword-splitting formula."""
    acc: dict = {}
    for pair in splittings(w):
        _bump(acc, pair, Fraction(1))
    return Tensor2(w.alphabet, acc)


def coproduct(p: NCPoly) -> Tensor2:
    """Linear extension of the word coproduct."""
    acc: dict = {}
    for w, c in p.terms.items():
        for pair in splittings(w):
            _bump(acc, pair, c)
    return Tensor2(p.alphabet, acc)


def _letter_coproduct(letter: Letter, alphabet: Alphabet) -> Tensor2:
    x = Word(alphabet, (letter,))
    if letter.group_like:
        return Tensor2(alphabet, {(x, x): 1})
    u = alphabet.unit_word()
    return Tensor2(alphabet, {(x, u): 1, (u, x): 1})


def coproduct_multiplicative(p: NCPoly) -> Tensor2:
    """Cross-check path: extend the letter rule multiplicatively in A (x) A.

    Agrees with coproduct() on everything; kept separate so the two routes
    can audit each other.
    """
    acc: dict = {}
    for w, c in p.terms.items():
        t = Tensor2.one(p.alphabet)
        for letter in w.letters:
            t = tensor2_mul(t, _letter_coproduct(letter, p.alphabet))
        for key, d in t.terms.items():
            _bump(acc, key, c * d)
    return Tensor2(p.alphabet, acc)


def counit(p: NCPoly) -> Fraction:
    """1 on words of group-like letters only (the empty word included),
    0 elsewhere, extended linearly."""
    total = Fraction(0)
    for w, c in p.terms.items():
        if all(l.group_like for l in w.letters):
            total += c
    return total


def antipode(p: NCPoly) -> NCPoly:
    """Sign-reversed word reversal, defined only when no letter is group-like."""
    if p.alphabet.has_group_like:
        raise DomainError("no antipode: group-like letters present")
    return NCPoly(
        p.alphabet,
        {w.reverse(): (c if len(w) % 2 == 0 else -c) for w, c in p.terms.items()},
    )


def tensor2_mul(x: Tensor2, y: Tensor2) -> Tensor2:
    """Componentwise concatenation product on A (x) A."""
    _same_alphabet(x.alphabet, y.alphabet)
    acc: dict = {}
    for (u1, v1), c in x.terms.items():
        for (u2, v2), d in y.terms.items():
            _bump(acc, (conc(u1, u2), conc(v1, v2)), c * d)
    return Tensor2(x.alphabet, acc)


def coassoc_lhs(p: NCPoly) -> Tensor3:
    """Split, then resplit the first component."""
    acc: dict = {}
    for (u, v), c in coproduct(p).terms.items():
        for (u1, u2), d in coproduct_word(u).terms.items():
            _bump(acc, (u1, u2, v), c * d)
    return Tensor3(p.alphabet, acc)


def coassoc_rhs(p: NCPoly) -> Tensor3:
    """Split, then resplit the second component."""
    acc: dict = {}
    for (u, v), c in coproduct(p).terms.items():
        for (v1, v2), d in coproduct_word(v).terms.items():
            _bump(acc, (u, v1, v2), c * d)
    return Tensor3(p.alphabet, acc)


# ---------------------------------------------------------------------------
# text grammar
#
#   poly   := ["+"|"-"] term (("+"|"-") term)*
#   term   := [rational "*"?]? word
#   rational := int | int "/" posint
#   word   := "1" | letter+
#
# Tensor terms replace the single word by words joined with "(x)"; the
# Unicode tensor sign is accepted on input only.


class _Cursor:
    __slots__ = ("text", "pos")

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def advance(self) -> str:
        ch = self.text[self.pos]
        self.pos += 1
        return ch

    def done(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def fail(self, msg: str):
        raise ParseError(f"{msg} at position {self.pos} in {self.text!r}")


def _parse_uint(cur: _Cursor) -> int:
    start = cur.pos
    while cur.peek().isdigit():
        cur.advance()
    if cur.pos == start:
        cur.fail("expected digits")
    return int(cur.text[start : cur.pos])


def _parse_rational(cur: _Cursor) -> Fraction:
    num = _parse_uint(cur)
    if cur.peek() == "/":
        cur.advance()
        den = _parse_uint(cur)
        if den == 0:
            cur.fail("zero denominator")
        return Fraction(num, den)
    return Fraction(num)


def _parse_word_opt(cur: _Cursor, alphabet: Alphabet):
    cur.skip_ws()
    if cur.peek() == "1":
        cur.advance()
        return alphabet.unit_word()
    letters = []
    while True:
        letter = alphabet.find(cur.peek()) if cur.peek() else None
        if letter is None:
            break
        cur.advance()
        letters.append(letter)
    if not letters:
        return None
    return Word(alphabet, tuple(letters))


def _parse_poly_term(cur: _Cursor, alphabet: Alphabet):
    cur.skip_ws()
    if cur.peek().isdigit():
        coeff = _parse_rational(cur)
        cur.skip_ws()
        if cur.peek() == "*":
            cur.advance()
            w = _parse_word_opt(cur, alphabet)
            if w is None:
                cur.fail("expected a word after '*'")
            return coeff, w
        w = _parse_word_opt(cur, alphabet)
        return coeff, (w if w is not None else alphabet.unit_word())
    w = _parse_word_opt(cur, alphabet)
    if w is None:
        cur.fail("expected a term")
    return Fraction(1), w


def _parse_tensor_sep(cur: _Cursor) -> bool:
    cur.skip_ws()
    if cur.peek() == "⊗":
        cur.advance()
        return True
    if cur.text.startswith("(x)", cur.pos):
        cur.pos += 3
        return True
    return False


def _parse_tensor_term(cur: _Cursor, alphabet: Alphabet, arity: int):
    cur.skip_ws()
    coeff = Fraction(1)
    first = None
    if cur.peek().isdigit():
        start = cur.pos
        num = _parse_rational(cur)
        cur.skip_ws()
        if cur.peek() == "*":
            cur.advance()
            first = _parse_word_opt(cur, alphabet)
            if first is None:
                cur.fail("expected a word after '*'")
            coeff = num
        else:
            w = _parse_word_opt(cur, alphabet)
            if w is not None:
                coeff, first = num, w
            elif cur.text[start : cur.pos].strip() == "1":
                # the bare token "1" was the unit word, not a coefficient
                first = alphabet.unit_word()
            else:
                cur.fail("expected a word")
    else:
        first = _parse_word_opt(cur, alphabet)
        if first is None:
            cur.fail("expected a term")
    comps = [first]
    for _ in range(arity - 1):
        if not _parse_tensor_sep(cur):
            cur.fail("expected '(x)'")
        w = _parse_word_opt(cur, alphabet)
        if w is None:
            cur.fail("expected a word after '(x)'")
        comps.append(w)
    return coeff, tuple(comps)


def _parse_sum(cur: _Cursor, parse_term):
    if cur.done():
        cur.fail("empty expression")
    sign = 1
    cur.skip_ws()
    if cur.peek() in "+-":
        sign = -1 if cur.advance() == "-" else 1
    while True:
        c, key = parse_term(cur)
        yield sign * c, key
        if cur.done():
            return
        ch = cur.peek()
        if ch == "+":
            sign = 1
        elif ch == "-":
            sign = -1
        else:
            cur.fail(f"expected '+' or '-', found {ch!r}")
        cur.advance()
