"""Concrete fermion and spin operator matrices and their defining algebras.

Fermion operators act on ``2**L`` dimensions with the sigma_z string on the
left: ``c_alpha = sz^(alpha-1) (x) c (x) 1^(L-alpha)``. Spin operators of spin
``s = two_s/2`` act on ``two_s + 1`` dimensions, rows ordered ``m = s, ..., -s``.
Indices in this module are 1-based flavors.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from spinfermion.core.errors import IncompatibleRepresentation, IndexOutOfRange
from spinfermion.core.exact_matrix import (
    Matrix,
    add,
    anticommutator,
    commutator,
    dagger,
    kron_all,
    matmul,
    scale,
    sub,
)
from spinfermion.core.exact_scalar import ExactComplex, ExactReal, IMAG_UNIT
from spinfermion.core.logger import get_logger
from spinfermion.core.report import CheckReport


@dataclass(frozen=True)
class Flavor:
    """Flavor ``alpha`` out of ``L``."""
    L: int
    alpha: int

    def __post_init__(self):
        if self.L < 1:
            raise IndexOutOfRange(f"Number of flavors must be positive, got L={self.L}")
        if not 1 <= self.alpha <= self.L:
            raise IndexOutOfRange(f"Flavor alpha={self.alpha} outside 1..{self.L}")


@dataclass(frozen=True)
class SpinRep:
    """Half-integer spin representation ``s = two_s / 2``."""
    two_s: int

    def __post_init__(self):
        if self.two_s < 1 or self.two_s % 2 == 0:
            raise IncompatibleRepresentation(
                f"Only half-integer spins are supported, got two_s={self.two_s}"
            )

    @classmethod
    def from_flavors(cls, L: int) -> "SpinRep":
        if L < 1:
            raise IncompatibleRepresentation(f"Number of flavors must be positive, got L={L}")
        return cls(2 ** L - 1)

    @property
    def s(self) -> Fraction:
        return Fraction(self.two_s, 2)

    @property
    def dim(self) -> int:
        return self.two_s + 1

    @property
    def flavors(self) -> int:
        """``L`` with ``2s + 1 == 2**L``."""
        dim = self.dim
        if dim & (dim - 1):
            raise IncompatibleRepresentation(
                f"2s+1 = {dim} is not a power of two; spin {self.two_s}/2 has no fermion form"
            )
        return dim.bit_length() - 1

    def __str__(self) -> str:
        return f"{self.two_s}/2"


# -- 2x2 building blocks -------------------------------------------------

@lru_cache(maxsize=None)
def sigma_z() -> Matrix:
    return Matrix.diagonal([1, -1])


@lru_cache(maxsize=None)
def identity2() -> Matrix:
    return Matrix.identity(2)


@lru_cache(maxsize=None)
def primitive_c() -> Matrix:
    return Matrix.from_rows([[0, 0], [1, 0]])


@lru_cache(maxsize=None)
def primitive_c_dag() -> Matrix:
    return Matrix.from_rows([[0, 1], [0, 0]])


@lru_cache(maxsize=None)
def projector_up() -> Matrix:
    """P_up = c^dagger c."""
    return Matrix.diagonal([1, 0])


@lru_cache(maxsize=None)
def projector_down() -> Matrix:
    """P_down = c c^dagger."""
    return Matrix.diagonal([0, 1])


# -- fermions ---------------------------------------------------------------

@lru_cache(maxsize=None)
def fermion_creator(f: Flavor) -> Matrix:
    factors = [sigma_z()] * (f.alpha - 1) + [primitive_c_dag()] + [identity2()] * (f.L - f.alpha)
    return kron_all(factors)


@lru_cache(maxsize=None)
def fermion_annihilator(f: Flavor) -> Matrix:
    return dagger(fermion_creator(f))


@lru_cache(maxsize=None)
def number_operator(f: Flavor) -> Matrix:
    return matmul(fermion_creator(f), fermion_annihilator(f))


# -- spins ------------------------------------------------------------------

@lru_cache(maxsize=None)
def spin_plus(rep: SpinRep) -> Matrix:
    """Raising operator with ``(S+)_{j,j+1} = sqrt(j (2s + 1 - j))``."""
    n = rep.dim
    entries = [ExactComplex()] * (n * n)
    for j in range(1, n):
        entries[(j - 1) * n + j] = ExactComplex(ExactReal.sqrt(j * (n - j)))
    return Matrix(n, n, entries)


@lru_cache(maxsize=None)
def spin_minus(rep: SpinRep) -> Matrix:
    return dagger(spin_plus(rep))


@lru_cache(maxsize=None)
def spin_z(rep: SpinRep) -> Matrix:
    return Matrix.diagonal([rep.s - k for k in range(rep.dim)])


@lru_cache(maxsize=None)
def spin_x(rep: SpinRep) -> Matrix:
    return scale(Fraction(1, 2), add(spin_plus(rep), spin_minus(rep)))


@lru_cache(maxsize=None)
def spin_y(rep: SpinRep) -> Matrix:
    # (S+ - S-) / 2i
    return scale(IMAG_UNIT * ExactComplex(Fraction(-1, 2)), sub(spin_plus(rep), spin_minus(rep)))


# -- algebra checks ---------------------------------------------------------

def verify_car(L: int, creators: Optional[Sequence[Matrix]] = None) -> CheckReport:
    """Check ``{c_a, c_b^dagger} = delta_ab`` and ``{c_a, c_b} = 0`` for all pairs.

    ``creators`` overrides the constructed operators (index 0 is flavor 1), so a
    corrupted set can be fed in as a negative control.
    """
    if creators is None:
        creators = [fermion_creator(Flavor(L, alpha)) for alpha in range(1, L + 1)]
    annihilators = [dagger(c) for c in creators]
    dim = creators[0].rows
    identity = Matrix.identity(dim)
    zero = Matrix.zeros(dim)

    count = len(creators)
    failures = []
    for a in range(count):
        for b in range(a, count):
            expected = identity if a == b else zero
            if anticommutator(annihilators[a], creators[b]) != expected:
                failures.append(f"{{c{a + 1}, c{b + 1}+}} != {'1' if a == b else '0'}")
            if anticommutator(annihilators[a], annihilators[b]) != zero:
                failures.append(f"{{c{a + 1}, c{b + 1}}} != 0")
    if failures:
        get_logger().warning(f"CAR check failed at L={L}: {failures[0]}")
    return CheckReport.from_failures("car", failures, L=L, pairs=count * (count + 1) // 2)


def verify_su2(
    rep: SpinRep,
    splus: Optional[Matrix] = None,
    sminus: Optional[Matrix] = None,
    sz: Optional[Matrix] = None,
) -> CheckReport:
    """Check ``[Sz, S+-] = +-S+-``, ``[S+, S-] = 2 Sz`` and ``S+^dagger = S-``."""
    splus = spin_plus(rep) if splus is None else splus
    sminus = dagger(splus) if sminus is None else sminus
    sz = spin_z(rep) if sz is None else sz

    failures = []
    if commutator(sz, splus) != splus:
        failures.append("[Sz,S+] = S+")
    if commutator(sz, sminus) != scale(-1, sminus):
        failures.append("[Sz,S-] = -S-")
    if commutator(splus, sminus) != scale(2, sz):
        failures.append("[S+,S-] = 2Sz")
    if dagger(splus) != sminus:
        failures.append("S+^dagger = S-")
    if failures:
        get_logger().warning(f"su(2) check failed for s={rep}: {failures[0]}")
    return CheckReport.from_failures("su2", failures, two_s=rep.two_s)
