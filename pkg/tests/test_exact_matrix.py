from fractions import Fraction

import pytest

from spinfermion.core.errors import DimensionMismatch, SingularMatrix
from spinfermion.core.exact_matrix import (
    Matrix,
    anticommutator,
    char_poly,
    commutator,
    dagger,
    inverse,
    kron,
    kron_all,
    mat_pow,
    matmul,
    matrix_from_json,
    matrix_to_json,
    rank,
    solve,
    trace,
    transpose,
)
from spinfermion.core.exact_scalar import ExactComplex, ExactReal, IMAG_UNIT

sqrt = ExactReal.sqrt


def test_identity_and_zeros():
    i3 = Matrix.identity(3)
    assert i3[0, 0] == 1 and i3[0, 1] == 0
    assert Matrix.zeros(2, 3).shape == (2, 3)
    assert Matrix.zeros(2, 3).is_zero()


def test_entry_count_is_checked():
    with pytest.raises(DimensionMismatch):
        Matrix(2, 2, [1, 2, 3])


def test_matmul_shapes():
    a = Matrix.from_rows([[1, 2, 3], [4, 5, 6]])
    b = Matrix.from_rows([[1], [0], [-1]])
    assert matmul(a, b) == Matrix.from_rows([[-2], [-2]])
    with pytest.raises(DimensionMismatch):
        matmul(b, b)


def test_kron_layout():
    c_dag = Matrix.from_rows([[0, 1], [0, 0]])
    sz = Matrix.diagonal([1, -1])
    k = kron(sz, c_dag)
    assert [(i, j, v) for i, j, v in k.nonzero_entries()] == [(0, 1, 1), (2, 3, -1)]
    k = kron(c_dag, Matrix.identity(2))
    assert [(i, j) for i, j, _ in k.nonzero_entries()] == [(0, 2), (1, 3)]


def test_kron_all_dimensions():
    m = kron_all([Matrix.identity(2)] * 3)
    assert m == Matrix.identity(8)


def test_dagger_conjugates():
    m = Matrix.from_rows([[1, IMAG_UNIT], [0, sqrt(2)]])
    d = dagger(m)
    assert d[1, 0] == ExactComplex(0, -1)
    assert d[1, 1] == sqrt(2)
    assert transpose(m)[1, 0] == IMAG_UNIT


def test_commutators():
    sx = Matrix.from_rows([[0, 1], [1, 0]])
    sy = Matrix.from_rows([[0, -IMAG_UNIT], [IMAG_UNIT, 0]])
    sz = Matrix.diagonal([1, -1])
    assert commutator(sx, sy) == 2 * IMAG_UNIT * sz
    assert anticommutator(sx, sy).is_zero()
    assert anticommutator(sx, sx) == 2 * Matrix.identity(2)


def test_mat_pow():
    a = Matrix.from_rows([[1, 1], [0, 1]])
    assert mat_pow(a, 5) == Matrix.from_rows([[1, 5], [0, 1]])
    assert mat_pow(a, 0) == Matrix.identity(2)
    with pytest.raises(ValueError):
        mat_pow(a, -1)


def test_solve_and_inverse():
    a = Matrix.from_rows([[2, 1], [1, sqrt(3)]])
    b = Matrix.column([1, 0])
    x = solve(a, b)
    assert matmul(a, x) == b
    assert matmul(a, inverse(a)) == Matrix.identity(2)


def test_solve_singular():
    with pytest.raises(SingularMatrix):
        solve(Matrix.from_rows([[1, 2], [2, 4]]), Matrix.column([1, 1]))


def test_rank():
    assert rank(Matrix.from_rows([[1, 2], [2, 4]])) == 1
    assert rank(Matrix.identity(4)) == 4
    assert rank(Matrix.from_rows([[1, sqrt(2)], [sqrt(2), 2], [0, 1]])) == 2


def test_trace():
    assert trace(Matrix.diagonal([1, sqrt(2), -1])) == sqrt(2)


def test_char_poly_of_diagonal():
    half = Fraction(1, 2)
    sz = Matrix.diagonal([3 * half, half, -half, -3 * half])
    poly = char_poly(sz)
    assert poly.coefficients == tuple(
        ExactComplex(c) for c in [Fraction(9, 16), 0, Fraction(-5, 2), 0, 1]
    )
    assert poly.degree == 4
    assert poly[7] == 0


def test_char_poly_is_similarity_invariant():
    a = Matrix.from_rows([[1, 2, 0], [0, sqrt(2), 1], [1, 0, -1]])
    p = Matrix.from_rows([[1, 1, 0], [0, 1, 1], [1, 0, 1]])
    conjugated = matmul(matmul(p, a), inverse(p))
    assert char_poly(conjugated) == char_poly(a)


def _random_matrix(rng, rows, cols, irrational=False):
    entries = []
    for _ in range(rows * cols):
        value = ExactReal.rational(Fraction(rng.randint(-3, 3), rng.randint(1, 3)))
        if irrational and rng.random() < 0.3:
            value = value * sqrt(2)
        entries.append(value)
    return Matrix(rows, cols, entries)


def _unit_triangular(rng, n, upper):
    entries = []
    for i in range(n):
        for j in range(n):
            if i == j:
                entries.append(1)
            elif (j > i) == upper:
                entries.append(rng.randint(-2, 2))
            else:
                entries.append(0)
    return Matrix(n, n, entries)


def test_kron_is_associative(rng):
    a = _random_matrix(rng, 2, 3, irrational=True)
    b = _random_matrix(rng, 2, 2)
    c = _random_matrix(rng, 3, 1, irrational=True)
    assert kron(kron(a, b), c) == kron(a, kron(b, c))
    assert kron_all([a, b, c]) == kron(a, kron(b, c))


def test_kron_mixed_product(rng):
    a = _random_matrix(rng, 2, 3, irrational=True)
    b = _random_matrix(rng, 2, 2)
    c = _random_matrix(rng, 3, 2)
    d = _random_matrix(rng, 2, 3, irrational=True)
    assert matmul(kron(a, b), kron(c, d)) == kron(matmul(a, c), matmul(b, d))


def test_dagger_reverses_products(rng):
    a = _random_matrix(rng, 3, 2, irrational=True) + IMAG_UNIT * _random_matrix(rng, 3, 2)
    b = _random_matrix(rng, 2, 4) + IMAG_UNIT * _random_matrix(rng, 2, 4, irrational=True)
    assert dagger(matmul(a, b)) == matmul(dagger(b), dagger(a))
    assert dagger(dagger(a)) == a


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_char_poly_survives_unimodular_similarity(n, rng):
    a = _random_matrix(rng, n, n, irrational=True)
    for _ in range(3):
        p = matmul(_unit_triangular(rng, n, upper=False), _unit_triangular(rng, n, upper=True))
        conjugated = matmul(matmul(p, a), inverse(p))
        assert char_poly(conjugated) == char_poly(a)


def test_char_poly_of_zero_matrix():
    assert char_poly(Matrix.zeros(2)).coefficients == (ExactComplex(0), ExactComplex(0), ExactComplex(1))


def test_matrix_json_round_trip():
    m = Matrix.from_rows([[Fraction(1, 2), IMAG_UNIT], [sqrt(3), 0]])
    document = matrix_to_json(m)
    assert document["entries"][1] == ["0", "1"]
    assert matrix_from_json(document) == m
