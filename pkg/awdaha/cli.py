"""Command-line interface: ``awdaha <verb> ...``.

Exit status is 0 on success, 1 when a verification fails, 2 for usage and
parse errors and 3 when normalization runs out of fuel.
"""

from __future__ import annotations

import functools
import json
import logging
import sys
from collections.abc import Callable
from dataclasses import dataclass
from pathlib import Path
from typing import Any, TypeVar

import click

from .algebras import get_algebra, hhat_q
from .coeff_matrix import PROJECTIONS, coefficient_matrix, decompose, project_pi
from .errors import AwdahaError, NonTermination
from .morphisms import braid, dagger, psi, xi, z4
from .reports import Report
from .rewriting import DEFAULT_FUEL
from .spec_format import export_spec
from .suites import SUITES, run_suite

F = TypeVar("F", bound=Callable[..., Any])

EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_FUEL = 3

ALGEBRA_CHOICE = click.Choice(["delta", "hhat"])
MAP_CHOICES = ("rho", "sigma", "tau", "z4", "dagger", "xi")


@dataclass
class Settings:
    fuel: int
    output_format: str


def _guarded(function: F) -> F:
    """Map library errors onto exit codes."""

    @functools.wraps(function)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return function(*args, **kwargs)
        except NonTermination as error:
            click.echo(f"Error: {error}", err=True)
            sys.exit(EXIT_FUEL)
        except AwdahaError as error:
            click.echo(f"Error: {error}", err=True)
            sys.exit(EXIT_USAGE)

    return wrapper  # type: ignore[return-value]


def _emit(settings: Settings, text: str, payload: Any) -> None:
    if settings.output_format == "json":
        click.echo(json.dumps(payload, indent=2))
    else:
        click.echo(text)


def _emit_report(settings: Settings, report: Report) -> None:
    _emit(settings, report.to_text(), report.to_json())
    if not report.passed:
        sys.exit(EXIT_FAILED)


algebra_option = click.option(
    "--algebra",
    "-a",
    type=ALGEBRA_CHOICE,
    default="delta",
    show_default=True,
    help="Algebra the expression lives in",
)


@click.group()
@click.option(
    "--fuel",
    type=click.IntRange(min=1),
    default=DEFAULT_FUEL,
    envvar="AWDAHA_FUEL",
    show_default=True,
    help="Rule applications allowed per normalization",
)
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "json"]),
    default="text",
    envvar="AWDAHA_FORMAT",
    show_default=True,
    help="Output format",
)
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG")
@click.version_option(package_name="awdaha")
@click.pass_context
def cli(ctx: click.Context, fuel: int, output_format: str, verbose: int) -> None:
    """Normal forms and verification for the universal Askey-Wilson algebra
    and the universal DAHA of type (C1v, C1)."""
    levels = (logging.WARNING, logging.INFO, logging.DEBUG)
    logging.basicConfig(
        level=levels[min(verbose, 2)],
        format="%(levelname)s %(name)s: %(message)s",
    )
    ctx.obj = Settings(fuel, output_format)


@cli.command()
@algebra_option
@click.argument("expression")
@click.pass_obj
@_guarded
def normalize(settings: Settings, algebra: str, expression: str) -> None:
    """Print the normal form of EXPRESSION."""
    spec = get_algebra(algebra)
    result = spec.element(expression, settings.fuel)
    _emit(
        settings,
        str(result),
        {"algebra": spec.name, "input": expression, "terms": result.to_json()},
    )


@cli.command()
@algebra_option
@click.pass_obj
@_guarded
def confluence(settings: Settings, algebra: str) -> None:
    """Resolve every overlap ambiguity of the algebra's rewrite system."""
    spec = get_algebra(algebra)
    found = spec.system.check_confluence(settings.fuel)
    lines = []
    for entry in found:
        status = "resolved" if entry.resolved else "UNRESOLVED"
        lines.append(f"{status} {spec.display(entry.word)}: {entry.left}")
    unresolved = len(found.unresolved)
    lines.append(f"{spec.name}: {len(found)} overlaps, {unresolved} unresolved")
    _emit(
        settings,
        "\n".join(lines),
        {"algebra": spec.name, "ambiguities": [entry.to_json() for entry in found]},
    )
    if not found.resolved:
        sys.exit(EXIT_FAILED)


@cli.command(name="psi")
@click.argument("expression", required=False)
@click.pass_obj
@_guarded
def psi_command(settings: Settings, expression: str | None) -> None:
    """Image of a Delta_q EXPRESSION in Hhat_q (all generators if omitted)."""
    base = psi()
    if expression is None:
        images = {name: base.image(name, settings.fuel) for name in base.images}
    else:
        images = {
            expression: base.apply(base.source.parse(expression), settings.fuel)
        }
    _emit(
        settings,
        "\n".join(f"psi({name}) = {image}" for name, image in images.items()),
        {name: image.to_json() for name, image in images.items()},
    )


@cli.command(name="braid")
@click.argument("kind", type=click.Choice(MAP_CHOICES))
@click.argument("expression")
@algebra_option
@click.pass_obj
@_guarded
def braid_command(
    settings: Settings, kind: str, expression: str, algebra: str
) -> None:
    """Apply a braid generator, z4 (hhat only), dagger or xi to EXPRESSION."""
    spec = get_algebra(algebra)
    if kind == "z4":
        if spec is not hhat_q():
            raise click.UsageError("z4 acts on hhat only")
        morphism = z4()
    elif kind == "dagger":
        morphism = dagger(spec)
    elif kind == "xi":
        morphism = xi(spec)
    else:
        morphism = braid(kind, spec)
    image = morphism.apply(spec.parse(expression), settings.fuel)
    _emit(
        settings,
        str(image),
        {
            "map": kind,
            "source": spec.name,
            "target": morphism.target.name,
            "terms": image.to_json(),
        },
    )


@cli.command(name="coeff-matrix")
@click.argument("expression")
@click.option(
    "--projections", is_flag=True, help="Also print the four summands pi_nu"
)
@click.pass_obj
@_guarded
def coeff_matrix_command(
    settings: Settings, expression: str, projections: bool
) -> None:
    """Coefficient matrix of an Hhat_q EXPRESSION."""
    element = hhat_q().parse(expression)
    matrix = coefficient_matrix(element, settings.fuel)
    text = [matrix.to_text()]
    payload: dict[str, Any] = {"matrix": matrix.to_json()}
    if projections:
        parts = decompose(element, settings.fuel)
        payload["projections"] = {}
        for nu in PROJECTIONS:
            summand = project_pi(nu, element, settings.fuel)
            text.append(f"pi_{nu} = {summand}")
            payload["projections"][nu] = {
                "element": summand.to_json(),
                "coefficients": [
                    {"a": a, "b": b, "entry": str(entry)}
                    for (a, b), entry in sorted(parts[nu].items())
                ],
            }
    _emit(settings, "\n".join(text), payload)


@cli.command()
@algebra_option
@click.option("--len", "length", type=click.IntRange(min=0), required=True)
@click.option("--count", is_flag=True, help="Print only the number of words")
@click.pass_obj
@_guarded
def basis(settings: Settings, algebra: str, length: int, count: bool) -> None:
    """Irreducible words of exactly --len letters."""
    spec = get_algebra(algebra)
    words = [spec.display(word) or "1" for word in spec.basis_words(length)]
    if count:
        _emit(settings, str(len(words)), {"algebra": spec.name, "count": len(words)})
    else:
        _emit(settings, "\n".join(words), {"algebra": spec.name, "words": words})


@cli.command()
@click.argument("suite", type=click.Choice([*SUITES, "all"]))
@click.pass_obj
@_guarded
def verify(settings: Settings, suite: str) -> None:
    """Run a verification suite (or all of them)."""
    _emit_report(settings, run_suite(suite, settings.fuel))


@cli.command(name="export-spec")
@algebra_option
@click.option(
    "--output",
    "-o",
    type=click.Path(dir_okay=False, path_type=Path),
    default=None,
    help="Write to a file instead of stdout",
)
@click.pass_obj
@_guarded
def export_spec_command(
    settings: Settings, algebra: str, output: Path | None
) -> None:
    """Write the algebra's rewrite system in the algebra-spec text format."""
    text = export_spec(get_algebra(algebra).system)
    if output is None:
        click.echo(text, nl=False)
    else:
        output.write_text(text, encoding="utf-8")
        click.echo(f"Wrote {output}", err=True)


def main() -> None:
    cli(prog_name="awdaha")
