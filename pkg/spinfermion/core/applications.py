"""Worked uses of the mapping: diagonal Hamiltonians, field precession, Ising terms."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from spinfermion.core.errors import DimensionMismatch, IndexOutOfRange, ZeroField
from spinfermion.core.exact_matrix import Matrix, add, char_poly, dagger, scale
from spinfermion.core.exact_scalar import (
    ExactComplex,
    ExactReal,
    ZERO,
    as_exact_real,
    format_exact_complex,
    format_exact_real,
)
from spinfermion.core.expansion import BasisKind, ExpansionTerm, OperatorExpansion, reconstruct
from spinfermion.core.fermion_to_spin import SpinPolynomial, number_op_polynomial
from spinfermion.core.operator_forge import (
    Flavor,
    SpinRep,
    number_operator,
    spin_x,
    spin_y,
    spin_z,
)
from spinfermion.core.report import CheckReport
from spinfermion.core.spin_to_fermion import spin_plus_fermionic, spin_z_fermionic
from spinfermion.core.uodm import FactorKind, FermionWord, compose, identity_word
from spinfermion.utils.validators import validate_occupations


@dataclass(frozen=True)
class FieldVector:
    """Magnetic field ``(bx, by, bz)`` with rational components."""
    bx: Fraction
    by: Fraction
    bz: Fraction

    def __post_init__(self):
        for name in ("bx", "by", "bz"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def is_zero(self) -> bool:
        return not (self.bx or self.by or self.bz)

    @property
    def z(self) -> ExactComplex:
        """``bx + i by``."""
        return ExactComplex(self.bx, self.by)


@dataclass(frozen=True)
class DiagonalHamiltonianSpec:
    """``H = sum_alpha E_alpha n_alpha`` on ``L`` flavors."""
    L: int
    energies: Tuple[ExactReal, ...]

    def __post_init__(self):
        values = tuple(as_exact_real(e) for e in self.energies)
        if len(values) != self.L:
            raise DimensionMismatch(f"Expected {self.L} energies, got {len(values)}")
        object.__setattr__(self, "energies", values)


# -- diagonal Hamiltonians ------------------------------------------------------

def diagonal_hamiltonian_spin_poly(spec: DiagonalHamiltonianSpec) -> SpinPolynomial:
    rep = SpinRep.from_flavors(spec.L)
    total = SpinPolynomial(rep.two_s, (ZERO,) * rep.dim)
    for alpha, energy in enumerate(spec.energies, start=1):
        if energy:
            total = total + number_op_polynomial(rep, alpha).scaled(energy)
    return total


def diagonal_hamiltonian_matrix(spec: DiagonalHamiltonianSpec) -> Matrix:
    total = Matrix.zeros(2 ** spec.L)
    for alpha, energy in enumerate(spec.energies, start=1):
        if energy:
            total = add(total, scale(energy, number_operator(Flavor(spec.L, alpha))))
    return total


# -- precession -----------------------------------------------------------------

def precession_hamiltonian_fermionic(b: FieldVector, rep: SpinRep) -> Matrix:
    """``(conj(z) S+ + z S-) / 2 + bz Sz`` with every operator rebuilt from fermions."""
    splus = reconstruct(spin_plus_fermionic(rep))
    sminus = dagger(splus)
    sz = reconstruct(spin_z_fermionic(rep))
    half = ExactComplex(Fraction(1, 2))
    h = add(scale(half * b.z.conjugate(), splus), scale(half * b.z, sminus))
    return add(h, scale(b.bz, sz))


def precession_hamiltonian_spin(b: FieldVector, rep: SpinRep) -> Matrix:
    """``bx Sx + by Sy + bz Sz`` from the spin matrices."""
    h = add(scale(b.bx, spin_x(rep)), scale(b.by, spin_y(rep)))
    return add(h, scale(b.bz, spin_z(rep)))


def rotated_field_magnitude(b: FieldVector) -> ExactReal:
    """Positive root of ``bx**2 + by**2 + bz**2``."""
    if b.is_zero():
        raise ZeroField("The field vector is zero; there is no rotated frame")
    return ExactReal.sqrt(b.bx ** 2 + b.by ** 2 + b.bz ** 2)


def spectrum_equal(h1: Matrix, h2: Matrix) -> CheckReport:
    """Compare spectra through exact characteristic polynomials."""
    if not h1.is_square() or h1.shape != h2.shape:
        raise DimensionMismatch(f"spectrum_equal needs equal square shapes, got {h1.shape}, {h2.shape}")
    p1, p2 = char_poly(h1), char_poly(h2)
    failures = []
    details: Dict[str, object] = {"char_poly": _poly_strings(p1.coefficients)}
    if p1 != p2:
        failures.append("characteristic polynomials differ")
        details["other_char_poly"] = _poly_strings(p2.coefficients)
    return CheckReport.from_failures("spectrum", failures, **details)


def _poly_strings(coefficients: Sequence[ExactComplex]) -> List[str]:
    return [format_exact_real(c.re) if c.is_real() else format_exact_complex(c) for c in coefficients]


# -- several spins ----------------------------------------------------------------

def multi_spin_sz(P: int, site: int, rep: SpinRep) -> OperatorExpansion:
    """Sz of spin ``site`` out of ``P``, over ``P * L`` flavors."""
    L = rep.flavors
    if P < 1 or not 1 <= site <= P:
        raise IndexOutOfRange(f"Site {site} outside 1..{P}")
    total = P * L
    offset = (site - 1) * L
    terms = [ExpansionTerm(ExactReal.rational(-rep.s), identity_word(total))]
    for alpha in range(1, L + 1):
        word = FermionWord(total, ((offset + alpha, FactorKind.NUMBER),))
        terms.append(ExpansionTerm(ExactReal.rational(2 ** (L - alpha)), word))
    return OperatorExpansion(BasisKind.FERMIONIC, total, tuple(terms))


def ising_zz_number_ops(rep: SpinRep) -> OperatorExpansion:
    """``Sz (x) Sz`` as products of number operators, like terms merged in first-seen order."""
    first = multi_spin_sz(2, 1, rep)
    second = multi_spin_sz(2, 2, rep)
    collected: Dict[FermionWord, ExactReal] = {}
    for left in first.terms:
        for right in second.terms:
            word = compose(left.element, right.element)
            collected[word] = collected.get(word, ZERO) + left.coeff * right.coeff
    terms = tuple(ExpansionTerm(c, w) for w, c in collected.items() if c)
    return OperatorExpansion(BasisKind.FERMIONIC, first.size, terms)


def occupation_state(occupations: Sequence[int]) -> Matrix:
    """Column vector of the occupation state ``|n_1 ... n_L>``; all-filled is index 0."""
    ok, message = validate_occupations(occupations)
    if not ok:
        raise ValueError(f"{message}: {list(occupations)}")
    L = len(occupations)
    index = sum((1 - n) * 2 ** (L - alpha) for alpha, n in enumerate(occupations, start=1))
    column = [0] * 2 ** L
    column[index] = 1
    return Matrix.column(column)
