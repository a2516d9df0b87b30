"""Operator expansions: coefficients over a fermionic or spin basis."""

from dataclasses import dataclass, field
from enum import Enum
from typing import Protocol, Tuple

from spinfermion.core.errors import DimensionMismatch
from spinfermion.core.exact_matrix import Matrix, add, mat_pow, scale
from spinfermion.core.exact_scalar import ExactReal


class BasisKind(Enum):
    """Which basis an expansion is written over."""
    FERMIONIC = "fermionic"
    SPIN = "spin"


class BasisElement(Protocol):
    """Anything with a realizing matrix and a printable label."""

    @property
    def matrix(self) -> Matrix: ...

    @property
    def label(self) -> str: ...


@dataclass(frozen=True)
class ExpansionTerm:
    coeff: ExactReal
    element: BasisElement


@dataclass(frozen=True)
class OperatorExpansion:
    """``(sum coeff * element) ** outer_power``.

    ``size`` is the flavor count ``L`` for fermionic expansions and ``two_s``
    for spin expansions.
    """
    basis_kind: BasisKind
    size: int
    terms: Tuple[ExpansionTerm, ...] = field(default_factory=tuple)
    outer_power: int = 1

    @property
    def dimension(self) -> int:
        if self.basis_kind is BasisKind.FERMIONIC:
            return 2 ** self.size
        return self.size + 1

    def coefficients(self) -> Tuple[ExactReal, ...]:
        return tuple(term.coeff for term in self.terms)

    def coefficient_of(self, label: str) -> ExactReal:
        """Coefficient of the term labelled ``label``; zero when absent."""
        for term in self.terms:
            if term.element.label == label:
                return term.coeff
        return ExactReal()

    def labels(self) -> Tuple[str, ...]:
        return tuple(term.element.label for term in self.terms)


def reconstruct(e: OperatorExpansion) -> Matrix:
    """``(sum coeff * element.matrix) ** outer_power``, exactly."""
    total = Matrix.zeros(e.dimension)
    for term in e.terms:
        matrix = term.element.matrix
        if matrix.shape != total.shape:
            raise DimensionMismatch(
                f"Term {term.element.label} has shape {matrix.shape}, expected {total.shape}"
            )
        if term.coeff:
            total = add(total, scale(term.coeff, matrix))
    return mat_pow(total, e.outer_power)
