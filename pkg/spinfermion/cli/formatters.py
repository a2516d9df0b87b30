"""Text renderings of CLI results; JSON goes through utils.serialization."""

from typing import List

from spinfermion.core.exact_matrix import Matrix
from spinfermion.core.exact_scalar import ExactReal, format_decimal, format_exact_complex, format_exact_real
from spinfermion.core.expansion import BasisKind, OperatorExpansion
from spinfermion.core.fermion_to_spin import SpinPolynomial
from spinfermion.core.report import CheckReport


def _approx(value: ExactReal, digits: int) -> str:
    if value.is_rational():
        return ""
    return f"  ~ {format_decimal(value, digits)}"


def render_matrix_text(m: Matrix, digits: int) -> str:
    """Non-zero entries with 1-based indices."""
    lines = [f"{m.rows}x{m.cols} matrix, non-zero entries (1-based):"]
    nonzero = m.nonzero_entries()
    for i, j, value in nonzero:
        text = format_exact_real(value.re) if value.is_real() else format_exact_complex(value)
        approx = _approx(value.re, digits) if value.is_real() else ""
        lines.append(f"  ({i + 1}, {j + 1}): {text}{approx}")
    if not nonzero:
        lines.append("  (none)")
    return "\n".join(lines)


def render_expansion_text(e: OperatorExpansion, digits: int) -> str:
    if e.basis_kind is BasisKind.FERMIONIC:
        header = f"fermionic expansion, L={e.size}"
    else:
        header = f"spin expansion, s={e.size}/2"
    if e.outer_power != 1:
        header += f", raised to the power {e.outer_power}"
    lines: List[str] = [header]
    width = max((len(term.element.label) for term in e.terms), default=0)
    for term in e.terms:
        label = term.element.label.ljust(width)
        lines.append(f"  {label}  {format_exact_real(term.coeff)}{_approx(term.coeff, digits)}")
    return "\n".join(lines)


def render_polynomial_text(p: SpinPolynomial, digits: int) -> str:
    lines = [f"polynomial in Sz, s={p.two_s}/2:"]
    for power, coeff in enumerate(p.coeffs):
        lines.append(f"  Sz^{power}  {format_exact_real(coeff)}{_approx(coeff, digits)}")
    return "\n".join(lines)


def render_report_text(report: CheckReport) -> str:
    lines = [f"{report.check}: {report.status.value.upper()}"]
    for key, value in report.details.items():
        lines.append(f"  {key}: {value}")
    for failure in report.failures:
        lines.append(f"  failed: {failure}")
    return "\n".join(lines)
