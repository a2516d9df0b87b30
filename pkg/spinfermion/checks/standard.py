"""Built-in checks behind ``spinfermion verify``."""

from typing import Any, Dict

from spinfermion.core.applications import (
    FieldVector,
    precession_hamiltonian_fermionic,
    precession_hamiltonian_spin,
    rotated_field_magnitude,
    spectrum_equal,
)
from spinfermion.core.check_loader import CheckBase
from spinfermion.core.exact_matrix import scale
from spinfermion.core.expansion import reconstruct
from spinfermion.core.fermion_to_spin import (
    eval_spin_poly,
    fermion_creator_spin_expansion,
    number_op_polynomial,
)
from spinfermion.core.operator_forge import (
    Flavor,
    SpinRep,
    fermion_creator,
    number_operator,
    spin_plus,
    spin_z,
    verify_car,
    verify_su2,
)
from spinfermion.core.report import CheckReport
from spinfermion.core.spin_to_fermion import spin_plus_fermionic, spin_z_fermionic
from spinfermion.core.uodm import build_uodm, closed_form_uodm, expand_uodm_fermionic
from spinfermion.utils.sampling import make_rng, random_field, random_uodm_vector


def _require(context: Dict[str, Any], key: str) -> Any:
    if context.get(key) is None:
        raise ValueError(f"Check needs '{key}' in its context")
    return context[key]


class CarCheck(CheckBase):
    NAME = "car"
    DESCRIPTION = "Canonical anticommutation relations of the constructed fermions"

    def execute(self, context: Dict[str, Any]) -> CheckReport:
        return verify_car(_require(context, "L"))


class Su2Check(CheckBase):
    NAME = "su2"
    DESCRIPTION = "su(2) commutation relations, also for fermion-built S+ and Sz when 2s+1 = 2^L"

    def execute(self, context: Dict[str, Any]) -> CheckReport:
        rep = SpinRep(_require(context, "two_s"))
        report = verify_su2(rep)
        dim = rep.dim
        if dim & (dim - 1) == 0:
            fermionic = verify_su2(
                rep,
                splus=reconstruct(spin_plus_fermionic(rep)),
                sz=reconstruct(spin_z_fermionic(rep)),
            )
            report.failures.extend(f"fermionic {f}" for f in fermionic.failures)
            report.details["fermionic"] = True
            report = CheckReport.from_failures(report.check, report.failures, **report.details)
        return report


class ClosedFormCheck(CheckBase):
    NAME = "closed-form"
    DESCRIPTION = "Pattern-matrix closed form against the recursion on random vectors"

    def execute(self, context: Dict[str, Any]) -> CheckReport:
        L = _require(context, "L")
        samples = context.get("samples", 20)
        rng = make_rng(context.get("seed", 0))
        failures = []
        for index in range(samples):
            v = random_uodm_vector(rng, L)
            target = build_uodm(v)
            if closed_form_uodm(v) != target:
                failures.append(f"sample {index}: closed form differs from build_uodm")
            if reconstruct(expand_uodm_fermionic(v)) != target:
                failures.append(f"sample {index}: basis expansion differs from build_uodm")
        return CheckReport.from_failures(self.NAME, failures, L=L, samples=samples)


class RoundtripCheck(CheckBase):
    NAME = "roundtrip"
    DESCRIPTION = "Spin to fermion and fermion to spin expansions rebuild their targets"

    def execute(self, context: Dict[str, Any]) -> CheckReport:
        rep = SpinRep(_require(context, "two_s"))
        L = rep.flavors
        failures = []
        if reconstruct(spin_plus_fermionic(rep)) != spin_plus(rep):
            failures.append("S+ from fermions")
        if reconstruct(spin_z_fermionic(rep)) != spin_z(rep):
            failures.append("Sz from fermions")
        for alpha in range(1, L + 1):
            flavor = Flavor(L, alpha)
            if eval_spin_poly(number_op_polynomial(rep, alpha), rep) != number_operator(flavor):
                failures.append(f"n{alpha} from Sz")
            if reconstruct(fermion_creator_spin_expansion(flavor)) != fermion_creator(flavor):
                failures.append(f"c{alpha}+ from S+ and Sz")
        return CheckReport.from_failures(self.NAME, failures, two_s=rep.two_s)


class SpectrumCheck(CheckBase):
    NAME = "spectrum"
    DESCRIPTION = "Precession Hamiltonian built from fermions has the spectrum of |b| Sz"

    def execute(self, context: Dict[str, Any]) -> CheckReport:
        rep = SpinRep(_require(context, "two_s"))
        field = context.get("field")
        if field is not None:
            return self._check_field(field, rep)
        samples = context.get("samples", 20)
        rng = make_rng(context.get("seed", 0))
        failures = []
        for index in range(samples):
            b = random_field(rng)
            report = self._check_field(b, rep)
            failures.extend(f"sample {index} b=({b.bx}, {b.by}, {b.bz}): {f}" for f in report.failures)
        return CheckReport.from_failures(self.NAME, failures, two_s=rep.two_s, samples=samples)

    def _check_field(self, b: FieldVector, rep: SpinRep) -> CheckReport:
        h = precession_hamiltonian_fermionic(b, rep)
        magnitude = rotated_field_magnitude(b)
        report = spectrum_equal(h, scale(magnitude, spin_z(rep)))
        if h != precession_hamiltonian_spin(b, rep):
            report.failures.append("fermionic H differs from bx Sx + by Sy + bz Sz")
        report.details["two_s"] = rep.two_s
        report.details["field_magnitude"] = str(magnitude)
        return CheckReport.from_failures(self.NAME, report.failures, **report.details)
