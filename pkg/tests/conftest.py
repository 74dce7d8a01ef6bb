import pytest

from hopfwords import Alphabet, LinRep, Matrix


@pytest.fixture
def ab():
    """All-primitive two-letter alphabet."""
    return Alphabet.from_decl("a:L,b:L")


@pytest.fixture
def mixed():
    """Two primitive letters and one group-like."""
    return Alphabet.from_decl("a:L,b:L,g:G")


@pytest.fixture
def single():
    return Alphabet.from_decl("a:L")


@pytest.fixture
def grouponly():
    return Alphabet.from_decl("g:G")


def geometric_rep(alphabet: Alphabet, c: int) -> LinRep:
    """f(w) = c^len(w): one state, every letter scales by c."""
    mu = {l: Matrix([[c]]) for l in alphabet.letters}
    return LinRep(alphabet, 1, Matrix.row_vector([1]), mu, Matrix.col_vector([1]))


def counting_rep(alphabet: Alphabet) -> LinRep:
    """f(w) = number of occurrences of the letter 'a' in w."""
    a = alphabet.find("a")
    mu = {}
    for l in alphabet.letters:
        mu[l] = Matrix([[1, 1], [0, 1]]) if l == a else Matrix.identity(2)
    return LinRep(alphabet, 2, Matrix.row_vector([1, 0]), mu, Matrix.col_vector([0, 1]))
