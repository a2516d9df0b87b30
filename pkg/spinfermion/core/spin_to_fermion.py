"""Spin operators written as polynomials in fermion operators."""

from fractions import Fraction

from spinfermion.core.exact_matrix import Matrix, add, dagger, scale, sub
from spinfermion.core.exact_scalar import ExactComplex, ExactReal, IMAG_UNIT
from spinfermion.core.expansion import BasisKind, ExpansionTerm, OperatorExpansion, reconstruct
from spinfermion.core.operator_forge import SpinRep, spin_plus
from spinfermion.core.uodm import (
    FactorKind,
    FermionWord,
    UodmVector,
    expand_uodm_fermionic,
    identity_word,
    real_off_diagonal,
)

__all__ = [
    "reconstruct",
    "spin_minus_from_fermions",
    "spin_plus_fermionic",
    "spin_x_from_fermions",
    "spin_y_from_fermions",
    "spin_z_fermionic",
]


def spin_plus_fermionic(rep: SpinRep) -> OperatorExpansion:
    """S+ over ``fermionic_basis(L)``; raises when ``2s + 1`` is not ``2**L``."""
    L = rep.flavors
    x = real_off_diagonal(spin_plus(rep))
    return expand_uodm_fermionic(UodmVector(L, x))


def spin_z_fermionic(rep: SpinRep) -> OperatorExpansion:
    """``Sz = -s + sum_alpha 2**(L - alpha) n_alpha``."""
    L = rep.flavors
    terms = [ExpansionTerm(ExactReal.rational(-rep.s), identity_word(L))]
    for alpha in range(1, L + 1):
        word = FermionWord(L, ((alpha, FactorKind.NUMBER),))
        terms.append(ExpansionTerm(ExactReal.rational(2 ** (L - alpha)), word))
    return OperatorExpansion(BasisKind.FERMIONIC, L, tuple(terms))


def spin_minus_from_fermions(rep: SpinRep) -> Matrix:
    return dagger(reconstruct(spin_plus_fermionic(rep)))


def spin_x_from_fermions(rep: SpinRep) -> Matrix:
    splus = reconstruct(spin_plus_fermionic(rep))
    return scale(Fraction(1, 2), add(splus, dagger(splus)))


def spin_y_from_fermions(rep: SpinRep) -> Matrix:
    splus = reconstruct(spin_plus_fermionic(rep))
    return scale(IMAG_UNIT * ExactComplex(Fraction(-1, 2)), sub(splus, dagger(splus)))
