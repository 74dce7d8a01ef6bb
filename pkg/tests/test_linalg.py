import random
from fractions import Fraction

import pytest

from hopfwords.errors import DomainError
from hopfwords.linalg import Matrix, RowReducer, rank, tensor_scheme


def test_matrix_construction_and_access():
    m = Matrix([[1, "1/2"], [0, 3]])
    assert m.nrows == 2 and m.ncols == 2
    assert m[0, 1] == Fraction(1, 2)
    assert m.row(1) == (Fraction(0), Fraction(3))
    assert m.col(0) == (Fraction(1), Fraction(0))


def test_matrix_rejects_bad_shapes():
    with pytest.raises(ValueError):
        Matrix([])
    with pytest.raises(ValueError):
        Matrix([[1, 2], [3]])


def test_arithmetic():
    a = Matrix([[1, 2], [3, 4]])
    b = Matrix([[0, 1], [1, 0]])
    assert a + b == Matrix([[1, 3], [4, 4]])
    assert a - b == Matrix([[1, 1], [2, 4]])
    assert -b == Matrix([[0, -1], [-1, 0]])
    assert a * b == Matrix([[2, 1], [4, 3]])
    assert a * Matrix.identity(2) == a
    assert a.scale(Fraction(1, 2)) == Matrix([["1/2", 1], ["3/2", 2]])
    assert 2 * a == a * 2


def test_matmul_dimension_mismatch():
    with pytest.raises(DomainError):
        Matrix([[1, 2]]) * Matrix([[1, 2]])


def test_transpose_and_stacks():
    a = Matrix([[1, 2], [3, 4]])
    assert a.transpose() == Matrix([[1, 3], [2, 4]])
    assert a.hstack(a).ncols == 4
    assert a.vstack(a).nrows == 4
    assert a.direct_sum(Matrix([[5]])) == Matrix([[1, 2, 0], [3, 4, 0], [0, 0, 5]])


def test_kron_example():
    a = Matrix([[1, 2], [3, 4]])
    b = Matrix([[0, 1], [1, 0]])
    k = a.kron(b)
    # (A x B)[i1*2+i2][j1*2+j2] = A[i1][j1] * B[i2][j2]
    for i1 in range(2):
        for i2 in range(2):
            for j1 in range(2):
                for j2 in range(2):
                    assert k[2 * i1 + i2, 2 * j1 + j2] == a[i1, j1] * b[i2, j2]


def test_kron_associative_and_mixed_product():
    rng = random.Random(7)

    def rand(n):
        return Matrix([[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)])

    a, b, c = rand(2), rand(2), rand(2)
    assert a.kron(b).kron(c) == a.kron(b.kron(c))
    d, e = rand(2), rand(2)
    # mixed-product property (A x B)(D x E) = AD x BE
    assert a.kron(b) * d.kron(e) == (a * d).kron(b * e)


def test_tensor_scheme():
    a = Matrix([[2]])
    b = Matrix([[3]])
    assert tensor_scheme(a, b, group_like=True) == Matrix([[6]])
    assert tensor_scheme(a, b, group_like=False) == Matrix([[5]])


def test_rank_examples():
    assert rank(Matrix([[1, 2, 4], [2, 4, 8], [4, 8, 16]])) == 1
    assert rank(Matrix.zeros(3, 3)) == 0
    assert rank(Matrix.identity(4)) == 4
    assert rank(Matrix([["1/2", 1], [1, 2]])) == 1
    assert rank(Matrix([[1, 0], [0, 0], [0, 1]])) == 2


def test_rank_matches_rowreducer_on_random_matrices():
    # two independent elimination routes must agree
    rng = random.Random(11)
    for _ in range(40):
        nr, nc = rng.randint(1, 5), rng.randint(1, 5)
        m = Matrix(
            [
                [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in range(nc)]
                for _ in range(nr)
            ]
        )
        reducer = RowReducer(nc)
        for row in m.rows:
            reducer.offer(row)
        assert rank(m) == reducer.rank
        assert rank(m) == rank(m.transpose())


def test_rowreducer_coordinates_recover_combinations():
    rng = random.Random(3)
    rows = [
        [1, 0, 2, 0],
        [0, 1, 1, 1],
        [0, 0, 0, 3],
    ]
    reducer = RowReducer(4)
    for r in rows:
        assert reducer.offer(r)
    for _ in range(20):
        coeffs = [Fraction(rng.randint(-4, 4)) for _ in rows]
        vec = [
            sum(c * Fraction(r[j]) for c, r in zip(coeffs, rows))
            for j in range(4)
        ]
        assert reducer.coordinates(vec) == coeffs
    assert reducer.coordinates([0, 0, 1, 0]) is None


def test_rowreducer_rejects_dependent_rows():
    reducer = RowReducer(3)
    assert reducer.offer([1, 2, 3])
    assert not reducer.offer([2, 4, 6])
    assert reducer.offer([0, 1, 0])
    assert not reducer.offer([1, 3, 3])
    assert reducer.rank == 2
