"""Typer application behind the ``spinfermion`` command.

Exit codes: 0 success, 1 usage error, 2 failed verification (including a
supplied root that does not validate), 3 incompatible representation.
Use :func:`run` for these codes; typer's own standalone mode reports usage
errors with 2.
"""

import sys
from contextlib import contextmanager
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional

import typer

from spinfermion import __app_name__, __version__
from spinfermion.cli.formatters import (
    render_expansion_text,
    render_matrix_text,
    render_polynomial_text,
    render_report_text,
)
from spinfermion.core.applications import (
    DiagonalHamiltonianSpec,
    FieldVector,
    diagonal_hamiltonian_spin_poly,
    ising_zz_number_ops,
)
from spinfermion.core.check_loader import get_check_loader
from spinfermion.core.config_manager import get_config_manager
from spinfermion.core.errors import (
    IncompatibleRepresentation,
    RootValidationFailure,
    SpinFermionError,
)
from spinfermion.core.exact_matrix import Matrix, matrix_to_json
from spinfermion.core.exact_scalar import parse_exact_real
from spinfermion.core.fermion_to_spin import (
    RootComponentVector,
    fermion_creator_spin_expansion,
    number_op_polynomial,
)
from spinfermion.core.logger import get_logger
from spinfermion.core.operator_forge import (
    Flavor,
    SpinRep,
    fermion_annihilator,
    fermion_creator,
    number_operator,
    spin_minus,
    spin_plus,
    spin_x,
    spin_y,
    spin_z,
)
from spinfermion.core.spin_to_fermion import spin_plus_fermionic, spin_z_fermionic
from spinfermion.utils.serialization import (
    dumps,
    expansion_to_json,
    polynomial_to_json,
    report_to_json,
)
from spinfermion.utils.validators import (
    validate_alpha,
    validate_flavor_count,
    validate_samples,
    validate_spin,
)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION_FAILED = 2
EXIT_INCOMPATIBLE = 3

# typer may vendor its own click; the base must come from the class typer raises
_ClickException = next(
    cls for cls in typer.BadParameter.__mro__ if cls.__name__ == "ClickException"
)

# options a built-in check cannot run without
REQUIRED_CONTEXT = {
    "car": "L",
    "closed-form": "L",
    "su2": "two_s",
    "roundtrip": "two_s",
    "spectrum": "two_s",
}


class OutputFormat(str, Enum):
    JSON = "json"
    TEXT = "text"


class ConstructOp(str, Enum):
    C = "c"
    CDAG = "cdag"
    N = "n"
    SPLUS = "splus"
    SMINUS = "sminus"
    SX = "sx"
    SY = "sy"
    SZ = "sz"


class SpinOp(str, Enum):
    PLUS = "plus"
    Z = "z"


@dataclass
class CliState:
    """Options shared by every subcommand."""
    output_format: OutputFormat
    output: Optional[Path]
    digits: int
    max_flavors: int
    samples: int
    seed: int


app = typer.Typer(
    name=__app_name__,
    help="Exact mapping between spin-s operators and L fermion flavors (2s+1 = 2^L).",
    add_completion=False,
    no_args_is_help=True,
)


def _version_callback(value: bool):
    if value:
        typer.echo(f"{__app_name__} {__version__}")
        raise typer.Exit()


@app.callback()
def main_callback(
    ctx: typer.Context,
    output_format: Optional[OutputFormat] = typer.Option(
        None, "--format", help="Output format (default from config: json)."
    ),
    output: Optional[Path] = typer.Option(
        None, "--output", "-o", help="Write the document to this file instead of stdout."
    ),
    log_level: Optional[str] = typer.Option(
        None, "--log-level", help="DEBUG, INFO, WARNING or ERROR (stderr)."
    ),
    version: bool = typer.Option(
        False, "--version", callback=_version_callback, is_eager=True, help="Show version and exit."
    ),
):
    """Construct, map and verify spin and fermion operators exactly."""
    config = get_config_manager().config
    try:
        get_logger().set_level(log_level or config.log_level)
    except ValueError:
        raise typer.BadParameter(f"Unknown log level {log_level!r}", param_hint="--log-level")
    if output_format is None:
        try:
            output_format = OutputFormat(config.output_format)
        except ValueError:
            get_logger().warning(f"Unknown output_format {config.output_format!r} in config; using json")
            output_format = OutputFormat.JSON
    ctx.obj = CliState(
        output_format=output_format,
        output=output,
        digits=config.float_digits,
        max_flavors=config.max_flavors,
        samples=config.samples,
        seed=config.seed,
    )


# -- helpers --------------------------------------------------------------------

@contextmanager
def _domain_errors() -> Iterator[None]:
    """Translate library errors into exit codes."""
    try:
        yield
    except IncompatibleRepresentation as e:
        _fail(e, EXIT_INCOMPATIBLE)
    except RootValidationFailure as e:
        _fail(e, EXIT_VERIFICATION_FAILED)
    except SpinFermionError as e:
        _fail(e, EXIT_USAGE)


def _fail(error: Exception, code: int):
    get_logger().debug(f"{type(error).__name__}: {str(error)}")
    typer.echo(f"Error: {str(error)}", err=True)
    raise typer.Exit(code)


def _emit(state: CliState, document: Dict[str, Any], text: str):
    payload = dumps(document) if state.output_format is OutputFormat.JSON else text
    if state.output is not None:
        state.output.parent.mkdir(parents=True, exist_ok=True)
        state.output.write_text(payload + "\n", encoding="utf-8")
        get_logger().info(f"Wrote {state.output}")
    else:
        typer.echo(payload)


def _flavor_count(state: CliState, L: Optional[int]) -> int:
    if L is None:
        raise typer.BadParameter("this command needs --L", param_hint="--L")
    ok, message = validate_flavor_count(L, state.max_flavors)
    if not ok:
        if L < 1:
            raise typer.BadParameter(message, param_hint="--L")
        raise IncompatibleRepresentation(message)
    return L


def _spin(state: CliState, two_s: Optional[int], mappable: bool = True) -> SpinRep:
    if two_s is None:
        raise typer.BadParameter("this command needs --two-s", param_hint="--two-s")
    ok, message = validate_spin(two_s, state.max_flavors, mappable=mappable)
    if not ok:
        raise IncompatibleRepresentation(message)
    return SpinRep(two_s)


def _flavor(L: int, alpha: Optional[int]) -> Flavor:
    if alpha is None:
        raise typer.BadParameter("this command needs --alpha", param_hint="--alpha")
    ok, message = validate_alpha(alpha, L)
    if not ok:
        raise typer.BadParameter(message, param_hint="--alpha")
    return Flavor(L, alpha)


def _split(text: str) -> List[str]:
    return [part.strip() for part in text.split(",") if part.strip()]


# -- commands ---------------------------------------------------------------------

@app.command()
def construct(
    ctx: typer.Context,
    op: ConstructOp = typer.Argument(..., help="c, cdag, n, splus, sminus, sx, sy or sz."),
    flavors: Optional[int] = typer.Option(None, "--L", help="Number of flavors (fermion operators)."),
    two_s: Optional[int] = typer.Option(None, "--two-s", help="Twice the spin (spin operators)."),
    alpha: Optional[int] = typer.Option(None, "--alpha", help="Flavor index, 1-based."),
):
    """Print an operator matrix."""
    state: CliState = ctx.obj
    with _domain_errors():
        if op in (ConstructOp.C, ConstructOp.CDAG, ConstructOp.N):
            flavor = _flavor(_flavor_count(state, flavors), alpha)
            build = {
                ConstructOp.C: fermion_annihilator,
                ConstructOp.CDAG: fermion_creator,
                ConstructOp.N: number_operator,
            }[op]
            matrix: Matrix = build(flavor)
        else:
            rep = _spin(state, two_s, mappable=False)
            build = {
                ConstructOp.SPLUS: spin_plus,
                ConstructOp.SMINUS: spin_minus,
                ConstructOp.SX: spin_x,
                ConstructOp.SY: spin_y,
                ConstructOp.SZ: spin_z,
            }[op]
            matrix = build(rep)
        _emit(state, matrix_to_json(matrix), render_matrix_text(matrix, state.digits))


@app.command("spin-to-fermion")
def spin_to_fermion(
    ctx: typer.Context,
    two_s: Optional[int] = typer.Option(None, "--two-s", help="Twice the spin; 2s+1 must be 2^L."),
    op: SpinOp = typer.Option(SpinOp.PLUS, "--op", help="plus or z."),
):
    """Expand S+ or Sz in fermion operators."""
    state: CliState = ctx.obj
    with _domain_errors():
        rep = _spin(state, two_s)
        expansion = spin_plus_fermionic(rep) if op is SpinOp.PLUS else spin_z_fermionic(rep)
        _emit(state, expansion_to_json(expansion), render_expansion_text(expansion, state.digits))


@app.command("fermion-to-spin")
def fermion_to_spin(
    ctx: typer.Context,
    flavors: Optional[int] = typer.Option(None, "--L", help="Number of flavors."),
    alpha: Optional[int] = typer.Option(None, "--alpha", help="Flavor index, 1-based."),
    components: Optional[str] = typer.Option(
        None, "--components", help="Comma-separated root vector; default is the canonical root."
    ),
):
    """Expand a fermion creator as a power of a polynomial in S+ and Sz."""
    state: CliState = ctx.obj
    with _domain_errors():
        flavor = _flavor(_flavor_count(state, flavors), alpha)
        root = None
        if components is not None:
            values = [parse_exact_real(part) for part in _split(components)]
            root = RootComponentVector(flavor.L, flavor.alpha, tuple(values))
        expansion = fermion_creator_spin_expansion(flavor, root)
        _emit(state, expansion_to_json(expansion), render_expansion_text(expansion, state.digits))


@app.command("numop-poly")
def numop_poly(
    ctx: typer.Context,
    two_s: Optional[int] = typer.Option(None, "--two-s", help="Twice the spin; 2s+1 must be 2^L."),
    alpha: Optional[int] = typer.Option(None, "--alpha", help="Flavor index, 1-based."),
):
    """Write a number operator as a polynomial in Sz."""
    state: CliState = ctx.obj
    with _domain_errors():
        rep = _spin(state, two_s)
        flavor = _flavor(rep.flavors, alpha)
        polynomial = number_op_polynomial(rep, flavor.alpha)
        _emit(state, polynomial_to_json(polynomial), render_polynomial_text(polynomial, state.digits))


@app.command()
def hamiltonian(
    ctx: typer.Context,
    flavors: Optional[int] = typer.Option(None, "--L", help="Number of flavors."),
    energies: str = typer.Option(..., "--energies", help="Comma-separated E_1..E_L."),
):
    """Rewrite sum_alpha E_alpha n_alpha as a polynomial in Sz."""
    state: CliState = ctx.obj
    with _domain_errors():
        L = _flavor_count(state, flavors)
        values = tuple(parse_exact_real(part) for part in _split(energies))
        polynomial = diagonal_hamiltonian_spin_poly(DiagonalHamiltonianSpec(L, values))
        _emit(state, polynomial_to_json(polynomial), render_polynomial_text(polynomial, state.digits))


@app.command()
def ising(
    ctx: typer.Context,
    two_s: Optional[int] = typer.Option(None, "--two-s", help="Twice the spin; 2s+1 must be 2^L."),
):
    """Expand Sz (x) Sz of two spins in number operators."""
    state: CliState = ctx.obj
    with _domain_errors():
        rep = _spin(state, two_s)
        if 2 * rep.flavors > state.max_flavors:
            raise IncompatibleRepresentation(
                f"Two spins need {2 * rep.flavors} flavors, above the cap of {state.max_flavors}"
            )
        expansion = ising_zz_number_ops(rep)
        _emit(state, expansion_to_json(expansion), render_expansion_text(expansion, state.digits))


def _parse_field(text: str) -> FieldVector:
    parts = _split(text)
    if len(parts) != 3:
        raise typer.BadParameter("expected three components bx,by,bz", param_hint="--field")
    try:
        return FieldVector(*(Fraction(part) for part in parts))
    except (ValueError, ZeroDivisionError):
        raise typer.BadParameter(f"components must be rationals, got {text!r}", param_hint="--field")


@app.command()
def verify(
    ctx: typer.Context,
    name: str = typer.Argument(..., help="car, su2, closed-form, roundtrip, spectrum or a plugin check."),
    flavors: Optional[int] = typer.Option(None, "--L", help="Number of flavors."),
    two_s: Optional[int] = typer.Option(None, "--two-s", help="Twice the spin."),
    samples: Optional[int] = typer.Option(None, "--samples", help="Random samples (default from config)."),
    seed: Optional[int] = typer.Option(None, "--seed", help="Random seed (default from config)."),
    field: Optional[str] = typer.Option(None, "--field", help="Fixed field bx,by,bz for the spectrum check."),
):
    """Run a verification check; exit 2 when it fails."""
    state: CliState = ctx.obj
    loader = get_check_loader()
    if loader.get_check(name) is None:
        raise typer.BadParameter(
            f"unknown check {name!r}; available: {', '.join(loader.check_names())}", param_hint="NAME"
        )
    samples = state.samples if samples is None else samples
    ok, message = validate_samples(samples)
    if not ok:
        raise typer.BadParameter(message, param_hint="--samples")

    with _domain_errors():
        context: Dict[str, Any] = {
            "samples": samples,
            "seed": state.seed if seed is None else seed,
        }
        if flavors is not None:
            context["L"] = _flavor_count(state, flavors)
        if two_s is not None:
            context["two_s"] = _spin(state, two_s, mappable=False).two_s
        if field is not None:
            context["field"] = _parse_field(field)
        required = REQUIRED_CONTEXT.get(name)
        if required is not None and required not in context:
            option = "--L" if required == "L" else "--two-s"
            raise typer.BadParameter(f"check {name!r} needs {option}", param_hint=option)

        report = loader.run_check(name, context)
        _emit(state, report_to_json(report), render_report_text(report))
        if not report.passed:
            raise typer.Exit(EXIT_VERIFICATION_FAILED)


def run(argv: Optional[List[str]] = None) -> int:
    """Invoke the CLI and return its exit code."""
    args = list(sys.argv[1:] if argv is None else argv)
    try:
        result = app(args=args, prog_name=__app_name__, standalone_mode=False)
    except _ClickException as e:
        e.show()
        return EXIT_USAGE
    except typer.Abort:
        return EXIT_USAGE
    return result if isinstance(result, int) else EXIT_OK
