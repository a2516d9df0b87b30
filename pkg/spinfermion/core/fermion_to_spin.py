"""Fermion operators written through S+ and Sz.

Creators come out as powers of UODMs expanded over ``S+ Sz**(alpha-1)``;
number operators are diagonal, so they are polynomials in ``Sz`` obtained by
inverting the Vandermonde matrix on the ``Sz`` eigenvalues.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import List, Optional, Sequence, Tuple

from spinfermion.core.errors import (
    DimensionMismatch,
    IndexOutOfRange,
    RepeatedNodes,
    RootValidationFailure,
)
from spinfermion.core.exact_matrix import Matrix, add, mat_pow, matmul, scale, solve
from spinfermion.core.exact_scalar import ONE, ZERO, ExactReal, as_exact_real
from spinfermion.core.expansion import BasisKind, ExpansionTerm, OperatorExpansion
from spinfermion.core.logger import get_logger
from spinfermion.core.operator_forge import (
    Flavor,
    SpinRep,
    fermion_creator,
    number_operator,
    spin_plus,
    spin_z,
)
from spinfermion.core.uodm import UodmVector, build_uodm, off_diagonal_vector


@dataclass(frozen=True)
class SpinBasisIndex:
    """``E_alpha = S+ Sz**(alpha - 1)``."""
    two_s: int
    alpha: int

    def __post_init__(self):
        if not 1 <= self.alpha <= self.two_s:
            raise IndexOutOfRange(f"Spin basis index {self.alpha} outside 1..{self.two_s}")

    @property
    def label(self) -> str:
        power = self.alpha - 1
        if power == 0:
            return "S+"
        if power == 1:
            return "S+ Sz"
        return f"S+ Sz^{power}"

    @cached_property
    def matrix(self) -> Matrix:
        rep = SpinRep(self.two_s)
        return matmul(spin_plus(rep), mat_pow(spin_z(rep), self.alpha - 1))

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class SpinPolynomial:
    """``sum_beta coeffs[beta] * Sz**beta``, lowest power first."""
    two_s: int
    coeffs: Tuple[ExactReal, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(as_exact_real(c) for c in self.coeffs))

    def __add__(self, other: "SpinPolynomial") -> "SpinPolynomial":
        if self.two_s != other.two_s:
            raise DimensionMismatch(f"Polynomials for two_s={self.two_s} and {other.two_s}")
        width = max(len(self.coeffs), len(other.coeffs))
        padded = [
            (self.coeffs[i] if i < len(self.coeffs) else ZERO)
            + (other.coeffs[i] if i < len(other.coeffs) else ZERO)
            for i in range(width)
        ]
        return SpinPolynomial(self.two_s, tuple(padded))

    def scaled(self, factor) -> "SpinPolynomial":
        factor = as_exact_real(factor)
        return SpinPolynomial(self.two_s, tuple(factor * c for c in self.coeffs))

    def is_zero(self) -> bool:
        return all(not c for c in self.coeffs)


@dataclass(frozen=True)
class RootComponentVector:
    """Off-diagonal of a UODM whose ``2**(L - alpha)``-th power is ``c_alpha^dagger``."""
    L: int
    alpha: int
    x: Tuple[ExactReal, ...]

    def __post_init__(self):
        Flavor(self.L, self.alpha)
        object.__setattr__(self, "x", UodmVector(self.L, self.x).x)

    @property
    def power(self) -> int:
        return 2 ** (self.L - self.alpha)

    def as_uodm(self) -> UodmVector:
        return UodmVector(self.L, self.x)


# -- spin basis ---------------------------------------------------------------

@lru_cache(maxsize=None)
def spin_basis(rep: SpinRep) -> Tuple[SpinBasisIndex, ...]:
    return tuple(SpinBasisIndex(rep.two_s, alpha) for alpha in range(1, rep.two_s + 1))


@lru_cache(maxsize=None)
def v_s(rep: SpinRep) -> Matrix:
    """``(V_S)_jk = (E_k)_{j, j+1}``."""
    columns = [off_diagonal_vector(e.matrix, 1) for e in spin_basis(rep)]
    n = rep.two_s
    return Matrix(n, n, [columns[k][j] for j in range(n) for k in range(n)])


# -- fermion roots ------------------------------------------------------------

def lambda_signs(k: int) -> Tuple[int, ...]:
    """``k``-fold iterate of ``a -> (a, -a)`` starting at ``(1,)``."""
    if k < 0:
        raise ValueError(f"lambda_signs needs k >= 0, got {k}")
    signs: Tuple[int, ...] = (1,)
    for _ in range(k):
        signs = signs + tuple(-s for s in signs)
    return signs


def validate_root(x: RootComponentVector) -> bool:
    """True when ``build_uodm(x) ** 2**(L - alpha)`` equals ``c_alpha^dagger``."""
    powered = mat_pow(build_uodm(x.as_uodm()), x.power)
    return powered == fermion_creator(Flavor(x.L, x.alpha))


def root_component_vector(f: Flavor) -> RootComponentVector:
    """Canonical root: ``2**(alpha-1)`` blocks of ones separated by zeros.

    Inside block ``k`` the entries at multiples of the period ``2**(L - alpha)``
    carry the sign ``lambda_signs(alpha - 1)[k]``.
    """
    period = 2 ** (f.L - f.alpha)
    block_length = 2 * period - 1
    x: List[int] = []
    for k, sign in enumerate(lambda_signs(f.alpha - 1)):
        if k:
            x.append(0)
        x.extend(sign if i % period == 0 else 1 for i in range(1, block_length + 1))
    root = RootComponentVector(f.L, f.alpha, tuple(x))
    if not validate_root(root):
        get_logger().error(f"Canonical root for flavor {f.alpha} of {f.L} failed validation")
        raise RootValidationFailure(f"Root for c{f.alpha}+ at L={f.L} does not power to the creator")
    return root


def fermion_creator_spin_expansion(
    f: Flavor, x: Optional[RootComponentVector] = None
) -> OperatorExpansion:
    """``c_alpha^dagger = (sum_k coeff_k S+ Sz**(k-1)) ** 2**(L - alpha)``."""
    x = root_component_vector(f) if x is None else x
    if (x.L, x.alpha) != (f.L, f.alpha):
        raise DimensionMismatch(f"Root vector is for flavor {x.alpha} of {x.L}, not {f.alpha} of {f.L}")
    if not validate_root(x):
        raise RootValidationFailure(f"Supplied vector is not a root of c{f.alpha}+ at L={f.L}")
    rep = SpinRep.from_flavors(f.L)
    solution = solve(v_s(rep), Matrix.column(list(x.x)))
    terms = tuple(
        ExpansionTerm(solution[k, 0].re, element) for k, element in enumerate(spin_basis(rep))
    )
    return OperatorExpansion(BasisKind.SPIN, rep.two_s, terms, outer_power=x.power)


# -- Vandermonde ----------------------------------------------------------------

def elementary_symmetric(
    values: Sequence[ExactReal], k: int, exclude: Optional[int] = None
) -> ExactReal:
    """Sum of all ``k``-fold products of distinct values, skipping index ``exclude`` (0-based)."""
    if exclude is not None:
        if not 0 <= exclude < len(values):
            raise IndexOutOfRange(f"Excluded index {exclude} outside 0..{len(values) - 1}")
        values = [v for i, v in enumerate(values) if i != exclude]
    if not 0 <= k <= len(values):
        raise IndexOutOfRange(f"Symmetric polynomial degree {k} outside 0..{len(values)}")
    # e[i] after processing a prefix holds the degree-i polynomial of that prefix
    e = [ONE] + [ZERO] * k
    for value in values:
        value = as_exact_real(value)
        for i in range(k, 0, -1):
            e[i] = e[i] + value * e[i - 1]
    return e[k]


def _check_nodes(nodes: Sequence[ExactReal]) -> List[ExactReal]:
    values = [as_exact_real(v) for v in nodes]
    if len(set(values)) != len(values):
        raise RepeatedNodes("Vandermonde nodes must be pairwise distinct")
    return values


def vandermonde(nodes: Sequence[ExactReal]) -> Matrix:
    """Row ``j`` is ``(v_j**0, v_j**1, ...)``."""
    values = [as_exact_real(v) for v in nodes]
    n = len(values)
    return Matrix(n, n, [v ** p for v in values for p in range(n)])


def vandermonde_denominator(nodes: Sequence[ExactReal], k: int) -> ExactReal:
    """``prod_{m < n, m = k or n = k} (v_n - v_m)`` for 1-based ``k``."""
    values = _check_nodes(nodes)
    if not 1 <= k <= len(values):
        raise IndexOutOfRange(f"Column {k} outside 1..{len(values)}")
    v_k = values[k - 1]
    product = ONE
    for index, v in enumerate(values, start=1):
        if index < k:
            product = product * (v_k - v)
        elif index > k:
            product = product * (v - v_k)
    return product


def vandermonde_inverse(nodes: Sequence[ExactReal]) -> Matrix:
    """Explicit inverse ``(-1)**(j+k) S_{n-j, k} / prod_{m<n', k in {m, n'}} (v_n' - v_m)``."""
    values = _check_nodes(nodes)
    n = len(values)
    entries = []
    for j in range(1, n + 1):
        for k in range(1, n + 1):
            numerator = elementary_symmetric(values, n - j, exclude=k - 1)
            if (j + k) % 2:
                numerator = -numerator
            entries.append(numerator / vandermonde_denominator(values, k))
    return Matrix(n, n, entries)


def _spin_nodes(rep: SpinRep) -> List[ExactReal]:
    return [e.re for e in spin_z(rep).diagonal_entries()]


@lru_cache(maxsize=None)
def _spin_vandermonde_inverse(rep: SpinRep) -> Matrix:
    return vandermonde_inverse(_spin_nodes(rep))


def number_op_polynomial(rep: SpinRep, alpha: int) -> SpinPolynomial:
    """Coefficients ``p`` with ``sum_beta p_beta Sz**beta == n_alpha``."""
    L = rep.flavors
    target = [e.re for e in number_operator(Flavor(L, alpha)).diagonal_entries()]
    inverse = _spin_vandermonde_inverse(rep)
    n = rep.dim
    coeffs = []
    for beta in range(n):
        total = ZERO
        for k in range(n):
            if target[k]:
                total = total + inverse[beta, k].re * target[k]
        coeffs.append(total)
    return SpinPolynomial(rep.two_s, tuple(coeffs))


def eval_spin_poly(p: SpinPolynomial, rep: SpinRep) -> Matrix:
    """``sum_beta coeffs[beta] * Sz**beta``."""
    if p.two_s != rep.two_s:
        raise DimensionMismatch(f"Polynomial for two_s={p.two_s} evaluated at two_s={rep.two_s}")
    sz = spin_z(rep)
    total = Matrix.zeros(rep.dim)
    power = Matrix.identity(rep.dim)
    for index, coeff in enumerate(p.coeffs):
        if index:
            power = matmul(power, sz)
        if coeff:
            total = add(total, scale(coeff, power))
    return total
