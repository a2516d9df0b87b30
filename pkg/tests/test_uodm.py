from fractions import Fraction

import pytest

from spinfermion.core.errors import DimensionMismatch, IndexOutOfRange, ParseError
from spinfermion.core.exact_matrix import Matrix, matmul, rank, transpose
from spinfermion.core.exact_scalar import IMAG_UNIT, ExactReal
from spinfermion.core.expansion import reconstruct
from spinfermion.core.operator_forge import Flavor, fermion_creator
from spinfermion.core.uodm import (
    FactorKind,
    UodmVector,
    build_uodm,
    closed_form_term,
    closed_form_uodm,
    compose,
    expand_uodm_fermionic,
    fermionic_basis,
    identity_word,
    index_shift,
    off_diagonal_vector,
    parse_word,
    pattern_matrix,
    r_vector,
    real_off_diagonal,
    v_c_inverse,
)
from spinfermion.utils.sampling import random_uodm_vector

sqrt = ExactReal.sqrt

M3_ROWS = [
    [1, 0, 0, 0, 0, 0, 0],
    [0, -1, 0, 0, 0, 0, 0],
    [1, 0, -1, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0],
    [1, 0, 0, 0, -1, 0, 0],
    [0, 1, 0, 0, 0, -1, 0],
    [1, 0, -1, 0, -1, 0, 1],
]


def test_uodm_vector_length():
    with pytest.raises(DimensionMismatch):
        UodmVector(2, (1, 2))


def test_build_uodm_places_entries():
    m = build_uodm(UodmVector(2, (1, 2, 3)))
    assert off_diagonal_vector(m, 1) == [1, 2, 3]
    assert len(m.nonzero_entries()) == 3


def test_off_diagonal_of_creator():
    c2 = fermion_creator(Flavor(3, 2))
    assert off_diagonal_vector(c2, 2) == [1, 1, 0, 0, -1, -1]
    with pytest.raises(DimensionMismatch):
        off_diagonal_vector(c2, 8)


def test_basis_labels_l3():
    labels = [w.label for w in fermionic_basis(3)]
    assert labels == ["n1 n2 c3+", "n1 c2+ c3-", "n1 c3+", "c1+ c2- c3-", "n2 c3+", "c2+ c3-", "c3+"]


def test_basis_labels_l4():
    labels = [w.label for w in fermionic_basis(4)]
    assert labels == [
        "n1 n2 n3 c4+", "n1 n2 c3+ c4-", "n1 n2 c4+", "n1 c2+ c3- c4-",
        "n1 n3 c4+", "n1 c3+ c4-", "n1 c4+", "c1+ c2- c3- c4-",
        "n2 n3 c4+", "n2 c3+ c4-", "n2 c4+", "c2+ c3- c4-",
        "n3 c4+", "c3+ c4-", "c4+",
    ]


@pytest.mark.parametrize("L", [1, 2, 3, 4])
def test_basis_matrices_are_uodms(L):
    n = 2 ** L
    for word in fermionic_basis(L):
        for i, j, _ in word.matrix.nonzero_entries():
            assert j == i + 1
        # the recursion and the plain factor product agree
        assert word.matrix == word.factor_product()
    assert len(fermionic_basis(L)) == n - 1


def test_index_shift_parity():
    word = parse_word("c1+", 1)
    shifted = index_shift(word)
    assert shifted.label == "c2+"
    assert shifted.matrix == fermion_creator(Flavor(2, 2))
    even = index_shift(parse_word("n1", 1))
    assert even.label == "n2"
    assert even.f == 2


def test_compose_and_identity():
    a = parse_word("n1", 2)
    b = parse_word("c2+", 2)
    word = compose(a, b)
    assert word.label == "n1 c2+"
    assert word.matrix == matmul(a.matrix, b.matrix)
    assert identity_word(2).label == "1"
    assert identity_word(2).matrix == Matrix.identity(4)
    assert word.factors[0] == (1, FactorKind.NUMBER)


@pytest.mark.parametrize("text", ["c3+", "x1", "c1", ""])
def test_parse_word_rejects(text):
    with pytest.raises((ParseError, IndexOutOfRange)):
        parse_word(text, 2)


def test_v_c_inverse_small():
    assert v_c_inverse(1) == Matrix.identity(1)
    m2 = v_c_inverse(2)
    assert m2 == Matrix.from_rows([[1, 0, 0], [0, -1, 0], [1, 0, -1]])
    assert matmul(m2, m2) == Matrix.identity(3)


def test_v_c_inverse_l3():
    assert v_c_inverse(3) == Matrix.from_rows(M3_ROWS)


@pytest.mark.parametrize("L", [1, 2, 3, 4])
def test_v_c_inverse_inverts_basis_matrix(L):
    # column k of the basis matrix is the off-diagonal of basis word k
    columns = [real_off_diagonal(w.matrix) for w in fermionic_basis(L)]
    n = 2 ** L - 1
    v_c = Matrix.from_rows([[columns[k][j] for k in range(n)] for j in range(n)])
    assert matmul(transpose(v_c_inverse(L)), v_c) == Matrix.identity(n)


def test_expansion_of_spin_three_halves_raiser():
    v = UodmVector(2, (sqrt(3), 2, sqrt(3)))
    e = expand_uodm_fermionic(v)
    assert e.coefficients() == (2 * sqrt(3), ExactReal.rational(-2), -sqrt(3))
    assert e.labels() == ("n1 c2+", "c1+ c2-", "c2+")


@pytest.mark.parametrize("L", [1, 2, 3, 4, 5])
def test_expansion_reconstructs(L, rng):
    for _ in range(5):
        v = random_uodm_vector(rng, L)
        assert reconstruct(expand_uodm_fermionic(v)) == build_uodm(v)


def test_zero_vector_gives_zero_expansion():
    e = expand_uodm_fermionic(UodmVector(3, (0,) * 7))
    assert all(c.is_zero() for c in e.coefficients())


def test_r_vector():
    assert r_vector(0) == (0,)
    assert r_vector(1) == (1, 0, -1)
    assert r_vector(2) == (1, 1, 1, 0, -1, -1, -1)


def test_pattern_matrices():
    assert pattern_matrix(2).rows == ((1,), (0,), (-1,))
    assert pattern_matrix(3).rows == ((1, 1), (1, 0), (1, -1), (0, 0), (-1, 1), (-1, 0), (-1, -1))
    p4 = pattern_matrix(4)
    assert p4.rows == (
        (1, 1, 1), (1, 1, 0), (1, 1, -1), (1, 0, 0),
        (1, -1, 1), (1, -1, 0), (1, -1, -1), (0, 0, 0),
        (-1, 1, 1), (-1, 1, 0), (-1, 1, -1), (-1, 0, 0),
        (-1, -1, 1), (-1, -1, 0), (-1, -1, -1),
    )
    assert p4.column(3) == (1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1)


def test_pattern_matrix_needs_two_flavors():
    with pytest.raises(ValueError):
        pattern_matrix(1)


@pytest.mark.parametrize("L", [2, 3, 4])
def test_closed_form_terms_are_unit_uodms(L):
    n = 2 ** L
    for j in range(1, n):
        assert closed_form_term(L, j).nonzero_entries() == [(j - 1, j, 1)]


@pytest.mark.parametrize("L", [1, 2, 3, 4, 5])
def test_closed_form_matches_build(L, rng):
    for _ in range(50):
        v = random_uodm_vector(rng, L)
        assert closed_form_uodm(v) == build_uodm(v)


def test_real_off_diagonal_rejects_complex():
    m = Matrix.from_rows([[0, IMAG_UNIT], [0, 0]])
    with pytest.raises(ValueError):
        real_off_diagonal(m)
    assert real_off_diagonal(Matrix.from_rows([[0, Fraction(1, 2)], [0, 0]])) == (Fraction(1, 2),)


def test_basis_is_linearly_independent():
    # 4x4 basis matrices flattened row-major give 16 columns
    vectorized = Matrix.from_rows([list(w.matrix.entries) for w in fermionic_basis(2)])
    assert vectorized.shape == (3, 16)
    assert rank(vectorized) == 3
    assert rank(Matrix.zeros(3)) == 0


@pytest.mark.parametrize("L", [1, 2, 3, 4, 5])
def test_basis_off_diagonals_have_full_rank(L):
    off_diagonals = Matrix.from_rows([list(real_off_diagonal(w.matrix)) for w in fermionic_basis(L)])
    assert rank(off_diagonals) == 2 ** L - 1
