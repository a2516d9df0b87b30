from fractions import Fraction

import pytest

from spinfermion.core.errors import IncompatibleRepresentation, IndexOutOfRange
from spinfermion.core.exact_matrix import Matrix, commutator, kron_all, matmul, scale
from spinfermion.core.exact_scalar import ExactReal, IMAG_UNIT
from spinfermion.core.operator_forge import (
    Flavor,
    SpinRep,
    fermion_annihilator,
    fermion_creator,
    identity2,
    number_operator,
    primitive_c,
    spin_minus,
    spin_plus,
    spin_x,
    spin_y,
    spin_z,
    verify_car,
    verify_su2,
)

sqrt = ExactReal.sqrt


@pytest.mark.parametrize("L", [1, 2, 3, 4, 5, 6])
def test_car_holds(L):
    report = verify_car(L)
    assert report.passed
    assert report.details["pairs"] == L * (L + 1) // 2


def test_car_negative_control():
    creators = [fermion_creator(Flavor(2, 1)), scale(2, fermion_creator(Flavor(2, 2)))]
    report = verify_car(2, creators=creators)
    assert not report.passed
    assert report.failures == ["{c2, c2+} != 1"]


def test_creator_layout():
    # sigma_z (x) c+ at L=2
    c2 = fermion_creator(Flavor(2, 2))
    assert [(i, j, v) for i, j, v in c2.nonzero_entries()] == [(0, 1, 1), (2, 3, -1)]
    c1 = fermion_creator(Flavor(2, 1))
    assert [(i, j) for i, j, _ in c1.nonzero_entries()] == [(0, 2), (1, 3)]


def test_number_operator_is_diagonal_projector():
    n1 = number_operator(Flavor(3, 1))
    assert n1 == Matrix.diagonal([1, 1, 1, 1, 0, 0, 0, 0])
    assert matmul(n1, n1) == n1
    assert fermion_annihilator(Flavor(3, 1))[4, 0] == 1


@pytest.mark.parametrize("L, alpha", [(0, 1), (2, 0), (2, 3)])
def test_flavor_range(L, alpha):
    with pytest.raises(IndexOutOfRange):
        Flavor(L, alpha)


@pytest.mark.parametrize("two_s", [1, 3, 5, 7, 15, 31, 63])
def test_su2_holds(two_s):
    assert verify_su2(SpinRep(two_s)).passed


def test_su2_negative_control():
    rep = SpinRep(3)
    report = verify_su2(rep, splus=scale(2, spin_plus(rep)))
    assert report.failures == ["[S+,S-] = 2Sz"]


def test_spin_three_halves_entries():
    rep = SpinRep(3)
    splus = spin_plus(rep)
    assert [v for _, _, v in splus.nonzero_entries()] == [sqrt(3), 2, sqrt(3)]
    assert spin_z(rep) == Matrix.diagonal([Fraction(3, 2), Fraction(1, 2), Fraction(-1, 2), Fraction(-3, 2)])
    assert spin_minus(rep)[1, 0] == sqrt(3)


def test_spin_seven_halves_off_diagonal():
    splus = spin_plus(SpinRep(7))
    expected = [sqrt(7), 2 * sqrt(3), sqrt(15), 4, sqrt(15), 2 * sqrt(3), sqrt(7)]
    assert [splus[j, j + 1] for j in range(7)] == expected


def test_sx_sy_commutator():
    rep = SpinRep(5)
    assert commutator(spin_x(rep), spin_y(rep)) == scale(IMAG_UNIT, spin_z(rep))


def test_spin_rep_validation():
    with pytest.raises(IncompatibleRepresentation):
        SpinRep(2)
    with pytest.raises(IncompatibleRepresentation):
        SpinRep(5).flavors
    assert SpinRep(15).flavors == 4
    assert SpinRep.from_flavors(3) == SpinRep(7)
    assert str(SpinRep(3)) == "3/2"


def test_string_absorbs_into_number_operator():
    # 1 (x) c (x) 1 == (2 n1 - 1) c2 at L=3
    left = kron_all([identity2(), primitive_c(), identity2()])
    sign = scale(2, number_operator(Flavor(3, 1))) - Matrix.identity(8)
    assert left == matmul(sign, fermion_annihilator(Flavor(3, 2)))
