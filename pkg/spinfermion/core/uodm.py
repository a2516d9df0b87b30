"""Upper off-diagonal matrices (UODMs) and their fermionic basis.

A UODM of dimension ``2**L`` is fixed by the ``2**L - 1`` entries on its first
upper off-diagonal. The fermionic basis spans that space; ``v_c_inverse``
turns an off-diagonal vector into basis coefficients, and the pattern-matrix
closed form rebuilds the same operator without the recursion.
"""

import re
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property, lru_cache
from typing import List, Optional, Sequence, Tuple

from spinfermion.core.errors import DimensionMismatch, ParseError
from spinfermion.core.exact_matrix import Matrix, add, kron, kron_all, matmul, scale
from spinfermion.core.exact_scalar import ExactComplex, ExactReal, as_exact_real
from spinfermion.core.expansion import BasisKind, ExpansionTerm, OperatorExpansion
from spinfermion.core.logger import get_logger
from spinfermion.core.operator_forge import (
    Flavor,
    fermion_annihilator,
    fermion_creator,
    identity2,
    number_operator,
    primitive_c,
    primitive_c_dag,
    projector_down,
    projector_up,
    sigma_z,
)


@dataclass(frozen=True)
class UodmVector:
    """Off-diagonal entries ``x_1 .. x_{2^L - 1}``."""
    L: int
    x: Tuple[ExactReal, ...]

    def __post_init__(self):
        values = tuple(as_exact_real(v) for v in self.x)
        if len(values) != 2 ** self.L - 1:
            raise DimensionMismatch(
                f"UODM vector for L={self.L} needs {2 ** self.L - 1} entries, got {len(values)}"
            )
        object.__setattr__(self, "x", values)


class FactorKind(Enum):
    CREATOR = "+"
    ANNIHILATOR = "-"
    NUMBER = "n"


@dataclass(frozen=True)
class FermionWord:
    """Ordered product of elementary fermion factors at ``L`` flavors.

    ``realized`` carries a matrix built by the basis recursion; without it the
    matrix is the product of the factor matrices.
    """
    L: int
    factors: Tuple[Tuple[int, FactorKind], ...] = ()
    realized: Optional[Matrix] = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        for alpha, _ in self.factors:
            Flavor(self.L, alpha)

    @property
    def f(self) -> int:
        """Elementary operator count; a number operator counts twice."""
        return sum(2 if kind is FactorKind.NUMBER else 1 for _, kind in self.factors)

    @property
    def label(self) -> str:
        if not self.factors:
            return "1"
        parts = []
        for alpha, kind in self.factors:
            parts.append(f"n{alpha}" if kind is FactorKind.NUMBER else f"c{alpha}{kind.value}")
        return " ".join(parts)

    def factor_product(self) -> Matrix:
        result = Matrix.identity(2 ** self.L)
        for alpha, kind in self.factors:
            flavor = Flavor(self.L, alpha)
            if kind is FactorKind.NUMBER:
                factor = number_operator(flavor)
            elif kind is FactorKind.CREATOR:
                factor = fermion_creator(flavor)
            else:
                factor = fermion_annihilator(flavor)
            result = matmul(result, factor)
        return result

    @cached_property
    def matrix(self) -> Matrix:
        return self.realized if self.realized is not None else self.factor_product()

    def __str__(self) -> str:
        return self.label


def identity_word(L: int) -> FermionWord:
    return FermionWord(L)


def compose(a: FermionWord, b: FermionWord) -> FermionWord:
    """Concatenate two words at the same ``L``; no reordering or simplification."""
    if a.L != b.L:
        raise DimensionMismatch(f"Cannot compose words at L={a.L} and L={b.L}")
    return FermionWord(a.L, a.factors + b.factors, realized=matmul(a.matrix, b.matrix))


_TOKEN_RE = re.compile(r"^(?:n(\d+)|c(\d+)([+-]))$")


def parse_word(text: str, L: int) -> FermionWord:
    """Read ``n1 c2+ c3-`` style words; ``1`` is the identity."""
    tokens = text.split()
    if tokens == ["1"]:
        return identity_word(L)
    factors = []
    for token in tokens:
        match = _TOKEN_RE.match(token)
        if match is None:
            raise ParseError(f"Unknown fermion factor {token!r} in {text!r}")
        number, alpha, sign = match.groups()
        if number is not None:
            factors.append((int(number), FactorKind.NUMBER))
        else:
            kind = FactorKind.CREATOR if sign == "+" else FactorKind.ANNIHILATOR
            factors.append((int(alpha), kind))
    if not factors:
        raise ParseError("Empty fermion word")
    return FermionWord(L, tuple(factors))


# -- UODM construction ------------------------------------------------------

def build_uodm(v: UodmVector) -> Matrix:
    """Matrix with ``x_j`` at ``(j, j+1)`` and zeros elsewhere."""
    n = 2 ** v.L
    entries = [ExactComplex()] * (n * n)
    for j, value in enumerate(v.x):
        entries[j * n + j + 1] = ExactComplex(value)
    return Matrix(n, n, entries)


def off_diagonal_vector(m: Matrix, k: int) -> List[ExactComplex]:
    """Entries ``m[j, j+k]`` for ``j = 1 .. dim - k``."""
    if not m.is_square():
        raise DimensionMismatch(f"off_diagonal_vector needs a square matrix, got {m.shape}")
    if not 1 <= k < m.rows:
        raise DimensionMismatch(f"Off-diagonal {k} does not exist in a {m.rows}x{m.rows} matrix")
    return [m[j, j + k] for j in range(m.rows - k)]


def real_off_diagonal(m: Matrix) -> Tuple[ExactReal, ...]:
    """First off-diagonal of a real UODM as exact reals."""
    values = off_diagonal_vector(m, 1)
    if any(not v.is_real() for v in values):
        raise ValueError("Only real-coefficient UODMs can be expanded")
    return tuple(v.re for v in values)


# -- fermionic basis ----------------------------------------------------------

def index_shift(w: FermionWord) -> FermionWord:
    """Raise every flavor by one and prepend ``sz`` (odd ``f``) or ``1`` (even ``f``)."""
    left = sigma_z() if w.f % 2 else identity2()
    factors = tuple((alpha + 1, kind) for alpha, kind in w.factors)
    return FermionWord(w.L + 1, factors, realized=kron(left, w.matrix))


def _long_word(L: int) -> FermionWord:
    factors = ((1, FactorKind.CREATOR),) + tuple(
        (alpha, FactorKind.ANNIHILATOR) for alpha in range(2, L + 1)
    )
    return FermionWord(L, factors)


@lru_cache(maxsize=None)
def fermionic_basis(L: int) -> Tuple[FermionWord, ...]:
    """The ``2**L - 1`` basis words, ordered by the recursion."""
    if L < 1:
        raise ValueError(f"fermionic_basis needs L >= 1, got {L}")
    if L == 1:
        return (FermionWord(1, ((1, FactorKind.CREATOR),)),)
    shifted = [index_shift(w) for w in fermionic_basis(L - 1)]
    n1 = FermionWord(L, ((1, FactorKind.NUMBER),))
    lower = [compose(n1, w) for w in shifted]
    get_logger().debug(f"Built fermionic basis for L={L}")
    return tuple(lower + [_long_word(L)] + shifted)


@lru_cache(maxsize=None)
def v_c_inverse(L: int) -> Matrix:
    """Block recursion ``[[Q, 0, 0], [0, (-1)^(L-1), 0], [A, 0, B]]``.

    ``A_jk = (-1)^(f_k + 1) Q_jk`` and ``B_jk = (-1)^(f_k) Q_jk`` with ``f_k``
    from ``fermionic_basis(L - 1)``. Coefficients follow as
    ``c_k = sum_j x_j M_jk``.
    """
    if L < 1:
        raise ValueError(f"v_c_inverse needs L >= 1, got {L}")
    if L == 1:
        return Matrix.identity(1)
    q = v_c_inverse(L - 1)
    parities = [w.f % 2 for w in fermionic_basis(L - 1)]
    m = q.rows
    n = 2 * m + 1
    entries = [ExactComplex()] * (n * n)
    for j in range(m):
        for k in range(m):
            value = q[j, k]
            if value.is_zero():
                continue
            entries[j * n + k] = value
            b = value if parities[k] == 0 else -value
            entries[(m + 1 + j) * n + k] = -b
            entries[(m + 1 + j) * n + m + 1 + k] = b
    entries[m * n + m] = ExactComplex(1 if L % 2 else -1)
    return Matrix(n, n, entries)


def expand_uodm_fermionic(v: UodmVector) -> OperatorExpansion:
    """Coefficients of ``build_uodm(v)`` over ``fermionic_basis(v.L)``."""
    inverse = v_c_inverse(v.L)
    basis = fermionic_basis(v.L)
    terms = []
    for k, word in enumerate(basis):
        coeff = ExactComplex()
        for j, x in enumerate(v.x):
            entry = inverse[j, k]
            if x and not entry.is_zero():
                coeff = coeff + entry * x
        terms.append(ExpansionTerm(coeff.re, word))
    return OperatorExpansion(BasisKind.FERMIONIC, v.L, tuple(terms))


# -- closed form --------------------------------------------------------------

def r_vector(k: int) -> Tuple[int, ...]:
    """``2**k - 1`` ones, a zero, ``2**k - 1`` minus ones."""
    if k < 0:
        raise ValueError(f"r_vector needs k >= 0, got {k}")
    run = 2 ** k - 1
    return (1,) * run + (0,) + (-1,) * run


@dataclass(frozen=True)
class PatternMatrix:
    """``(2**L - 1) x (L - 1)`` table with entries in ``{-1, 0, 1}``."""
    L: int
    rows: Tuple[Tuple[int, ...], ...]

    def column(self, l: int) -> Tuple[int, ...]:
        """Column ``l``, 1-based."""
        return tuple(row[l - 1] for row in self.rows)


def _pattern_column(L: int, l: int) -> List[int]:
    block = list(r_vector(L - l))
    column: List[int] = []
    for copy in range(2 ** (l - 1)):
        if copy:
            column.append(0)
        column.extend(block)
    return column


@lru_cache(maxsize=None)
def pattern_matrix(L: int) -> PatternMatrix:
    """Column ``l`` is ``2**(l-1)`` copies of ``r_vector(L - l)`` joined by single zeros."""
    if L < 2:
        raise ValueError(f"pattern_matrix needs L >= 2, got {L}")
    columns = [_pattern_column(L, l) for l in range(1, L)]
    return PatternMatrix(L, tuple(zip(*columns)))


@lru_cache(maxsize=None)
def closed_form_term(L: int, j: int) -> Matrix:
    """``Pi_j (x) c^dagger (x) c^(x m_j)`` for row ``j`` (1-based) of the pattern matrix."""
    row = pattern_matrix(L).rows[j - 1]
    projectors = [projector_up() if e == 1 else projector_down() for e in row if e]
    m = L - 1 - len(projectors)
    return kron_all(projectors + [primitive_c_dag()] + [primitive_c()] * m)


def closed_form_uodm(v: UodmVector) -> Matrix:
    """Non-recursive rebuild of ``build_uodm(v)`` from the pattern matrix."""
    if v.L == 1:
        return scale(v.x[0], primitive_c_dag())
    total = Matrix.zeros(2 ** v.L)
    for j, x in enumerate(v.x, start=1):
        if x:
            total = add(total, scale(x, closed_form_term(v.L, j)))
    return total
