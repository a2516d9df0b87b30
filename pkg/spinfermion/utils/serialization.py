"""JSON documents for expansions, polynomials, matrices and reports."""

import json
import re
from typing import Any, Dict

from spinfermion.core.errors import ParseError
from spinfermion.core.exact_scalar import format_exact_real, parse_exact_real
from spinfermion.core.expansion import BasisKind, ExpansionTerm, OperatorExpansion
from spinfermion.core.fermion_to_spin import SpinBasisIndex, SpinPolynomial
from spinfermion.core.report import CheckReport
from spinfermion.core.uodm import parse_word

_SPIN_LABEL_RE = re.compile(r"^S\+(?: Sz(?:\^(\d+))?)?$")


def dumps(document: Dict[str, Any]) -> str:
    """Deterministic UTF-8 JSON text."""
    return json.dumps(document, indent=2, ensure_ascii=False)


def expansion_to_json(e: OperatorExpansion) -> Dict[str, Any]:
    size_key = "L" if e.basis_kind is BasisKind.FERMIONIC else "two_s"
    document: Dict[str, Any] = {size_key: e.size, "basis": e.basis_kind.value}
    if e.basis_kind is BasisKind.SPIN or e.outer_power != 1:
        document["outer_power"] = e.outer_power
    document["terms"] = [
        {"coeff": format_exact_real(term.coeff), "word": term.element.label} for term in e.terms
    ]
    return document


def parse_spin_label(label: str, two_s: int) -> SpinBasisIndex:
    match = _SPIN_LABEL_RE.match(label.strip())
    if match is None:
        raise ParseError(f"Unknown spin basis element {label!r}")
    if "Sz" not in label:
        return SpinBasisIndex(two_s, 1)
    power = int(match.group(1)) if match.group(1) else 1
    return SpinBasisIndex(two_s, power + 1)


def expansion_from_json(document: Dict[str, Any]) -> OperatorExpansion:
    try:
        kind = BasisKind(document["basis"])
        outer_power = int(document.get("outer_power", 1))
        if kind is BasisKind.FERMIONIC:
            size = int(document["L"])
            terms = [
                ExpansionTerm(parse_exact_real(t["coeff"]), parse_word(t["word"], size))
                for t in document["terms"]
            ]
        else:
            size = int(document["two_s"])
            terms = [
                ExpansionTerm(parse_exact_real(t["coeff"]), parse_spin_label(t["word"], size))
                for t in document["terms"]
            ]
    except (KeyError, TypeError) as e:
        raise ParseError(f"Malformed expansion document: {str(e)}") from e
    return OperatorExpansion(kind, size, tuple(terms), outer_power)


def polynomial_to_json(p: SpinPolynomial) -> Dict[str, Any]:
    return {"two_s": p.two_s, "coeffs": [format_exact_real(c) for c in p.coeffs]}


def polynomial_from_json(document: Dict[str, Any]) -> SpinPolynomial:
    try:
        return SpinPolynomial(
            int(document["two_s"]), tuple(parse_exact_real(c) for c in document["coeffs"])
        )
    except (KeyError, TypeError) as e:
        raise ParseError(f"Malformed polynomial document: {str(e)}") from e


def report_to_json(report: CheckReport) -> Dict[str, Any]:
    return report.to_dict()
