"""Main CLI entry point for DeltaBound."""

import contextlib
import functools
import io
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Callable, List, Optional, Sequence

import click
import pandas as pd
from pydantic import BaseModel
from rich.console import Console
from rich.table import Table

from deltabound import __version__
from deltabound.config.settings import Settings
from deltabound.core.errors import DeltaBoundError
from deltabound.core.logging import configure_logging
from deltabound.core.pipeline import DeltaBoundPipeline
from deltabound.models.payloads import PAYLOADS, FitPayload

console = Console()
err_console = Console(stderr=True)


@dataclass
class CommandResult:
    """Exit code (0 ok, 1 domain error, 2 usage error, 3 resource limit) and stdout text."""

    exit_code: int
    payload: str


def handle_errors(func: Callable) -> Callable:
    """Print library errors on stderr and exit with their code."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except DeltaBoundError as e:
            err_console.print(f"error: {e}", markup=False, highlight=False)
            sys.exit(e.exit_code)

    return wrapper


def _format(ctx: click.Context, default: str) -> str:
    return ctx.obj["format"] or default


def emit(
    ctx: click.Context,
    payload: BaseModel,
    frame: Optional[pd.DataFrame] = None,
    default: str = "json",
) -> None:
    """Write the payload as JSON, or ``frame`` as CSV when that format is selected."""
    if _format(ctx, default) == "csv" and frame is not None:
        click.echo(frame.to_csv(index=False, lineterminator="\n"), nl=False)
    else:
        click.echo(payload.model_dump_json(indent=2))


def _pipeline(ctx: click.Context) -> DeltaBoundPipeline:
    return ctx.obj["pipeline"]


@click.group()
@click.version_option(version=__version__)
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["json", "csv"]),
    default=None,
    help="Output format (count and repulsion default to csv, everything else to json)",
)
@click.option("--threads", type=click.IntRange(min=1), default=None, help="Worker processes for enumeration")
@click.option("--seed", type=int, default=None, help="Reserved; no command is randomized")
@click.option("--log-level", type=str, default=None, help="Log level for stderr diagnostics")
@click.pass_context
def cli(
    ctx: click.Context,
    output_format: Optional[str],
    threads: Optional[int],
    seed: Optional[int],
    log_level: Optional[str],
) -> None:
    """DeltaBound - exact invariants and point counts for rational points of bounded height.

    Computes δ, a and s invariants with exact arithmetic, the counting exponents
    they give, and enumerates rational points over Q to check them.
    """
    settings = Settings()
    if log_level:
        settings = settings.model_copy(update={"log_level": log_level})
    configure_logging(settings)
    ctx.ensure_object(dict)
    ctx.obj["settings"] = settings
    ctx.obj["format"] = output_format
    ctx.obj["threads"] = threads
    ctx.obj["seed"] = seed
    ctx.obj["pipeline"] = DeltaBoundPipeline(settings=settings)


@cli.command("k3-bound")
@click.option("--d", "d", type=int, required=True, help="H² = 2d on a Picard-rank-one K3 surface")
@click.pass_context
@handle_errors
def k3_bound(ctx: click.Context, d: int) -> None:
    """s-invariant and counting exponent for a polarized K3 surface."""
    payload = _pipeline(ctx).k3_bound(d)
    emit(ctx, payload, pd.DataFrame([payload.model_dump(exclude={"witness"})]))


@cli.command("enriques-bound")
@click.option("--k", "k", type=int, required=True, help="H is k-very ample")
@click.pass_context
@handle_errors
def enriques_bound(ctx: click.Context, k: int) -> None:
    """s-invariant bound 2/(k+2) for an unnodal Enriques surface."""
    payload = _pipeline(ctx).enriques_bound(k)
    emit(ctx, payload, pd.DataFrame([payload.model_dump(mode="json")]))


@cli.command()
@click.option("--degree", type=int, required=True, help="Degree 1..9")
@click.option("--certify", is_flag=True, help="Include the certificate reports")
@click.pass_context
@handle_errors
def delpezzo(ctx: click.Context, degree: int, certify: bool) -> None:
    """δ(S, -K_S) of a del Pezzo surface from its certificates."""
    payload = _pipeline(ctx).delpezzo(degree, certify=certify)
    emit(ctx, payload, pd.DataFrame([payload.model_dump(exclude={"reports"})]))


@cli.command("a-invariant")
@click.option("--lattice", "lattice_spec", required=True, help="delpezzo:<degree> or blowup:<r>")
@click.option("--divisor", required=True, help="Comma-separated coordinates, e.g. 1,0")
@click.pass_context
@handle_errors
def a_invariant(ctx: click.Context, lattice_spec: str, divisor: str) -> None:
    """Fujita a-invariant a(X, L) of a nef class on a surface lattice."""
    payload = _pipeline(ctx).a_invariant(lattice_spec, divisor)
    emit(ctx, payload, pd.DataFrame([payload.model_dump()]))


@cli.group()
def fano() -> None:
    """Mori-Mukai tables of Fano conic bundles."""


@fano.command("lookup")
@click.option("--rank", type=int, required=True)
@click.option("--no", "number", type=int, required=True)
@click.pass_context
@handle_errors
def fano_lookup(ctx: click.Context, rank: int, number: int) -> None:
    """One table entry with its counting-bound statements."""
    payload = _pipeline(ctx).fano_lookup(rank, number)
    emit(ctx, payload, pd.DataFrame([payload.entry.to_row()]))


@fano.command("verify")
@click.option("--rank", type=int, required=True)
@click.option("--no", "number", type=int, required=True)
@click.pass_context
@handle_errors
def fano_verify(ctx: click.Context, rank: int, number: int) -> None:
    """Re-run an entry's certificates against the stored values."""
    report = _pipeline(ctx).fano_verify(rank, number)
    frame = pd.DataFrame([c.model_dump() for c in report.checks])
    emit(ctx, report, frame)


@fano.command("export")
@click.option("--rank", type=int, default=None, help="Restrict to one Picard rank")
@click.pass_context
@handle_errors
def fano_export(ctx: click.Context, rank: Optional[int]) -> None:
    """Export the tables as canonical JSON or CSV."""
    db = _pipeline(ctx).fano
    if _format(ctx, "json") == "csv":
        click.echo(db.export_csv(rank), nl=False)
    else:
        click.echo(db.export_json(rank), nl=False)


@fano.command("list")
@click.option("--rank", type=int, default=None, help="Restrict to one Picard rank")
@click.pass_context
@handle_errors
def fano_list(ctx: click.Context, rank: Optional[int]) -> None:
    """Show the tables."""
    table = Table(title="Fano conic bundles with a rational section")
    table.add_column("rank", justify="right")
    table.add_column("no", justify="right")
    table.add_column("(-K)^3", justify="right")
    table.add_column("6δ", justify="right", style="cyan")
    table.add_column("2α", justify="right", style="green")
    table.add_column("flags")
    for entry in _pipeline(ctx).fano.entries(rank):
        row = entry.to_row()
        table.add_row(
            str(entry.picard_rank),
            str(entry.mm_number),
            "" if entry.anticanonical_degree is None else str(entry.anticanonical_degree),
            row["six_delta"],
            row["two_alpha"],
            row["flags"],
        )
    console.print(table)


@cli.command()
@click.option("--model", "model_path", required=True, help="Variety model file or bundled name")
@click.option("--tmax", type=int, required=True, help="Largest height bound T")
@click.option("--steps", type=click.IntRange(min=1), default=None, help="Geometric grid of T values")
@click.pass_context
@handle_errors
def count(ctx: click.Context, model_path: str, tmax: int, steps: Optional[int]) -> None:
    """Counting function N(U, L, T) for T up to tmax."""
    payload = _pipeline(ctx).count(model_path, tmax, steps=steps, threads=ctx.obj["threads"])
    frame = pd.DataFrame({"T": [r.T for r in payload.rows], "count": [r.count for r in payload.rows]})
    emit(ctx, payload, frame, default="csv")


@cli.command()
@click.option("--series", type=click.Path(exists=True, dir_okay=False, path_type=Path), required=True)
@click.pass_context
@handle_errors
def fit(ctx: click.Context, series: Path) -> None:
    """Least-squares growth exponent of a "T,count" series (diagnostic)."""
    result = _pipeline(ctx).fit(series)
    payload = FitPayload(slope=result.slope, r_squared=result.r_squared, rows_used=result.rows_used)
    emit(ctx, payload, pd.DataFrame([payload.model_dump()]))


@cli.command()
@click.option("--model", "model_path", required=True, help="Variety model file or bundled name")
@click.option("--delta", required=True, help="Rational p/q")
@click.option("--eps", default="0", show_default=True, help="Rational p/q")
@click.option("--tmax", type=int, required=True, help="Largest height bound T")
@click.option("--steps", type=click.IntRange(min=1), default=None, help="Scan a geometric grid of T values")
@click.pass_context
@handle_errors
def repulsion(
    ctx: click.Context, model_path: str, delta: str, eps: str, tmax: int, steps: Optional[int]
) -> None:
    """Minimal dist²·(H(P)H(Q))^{2(δ+ε)} over distinct pairs of height ≤ T."""
    payload = _pipeline(ctx).repulsion(
        model_path, delta, eps, tmax, steps=steps, threads=ctx.obj["threads"]
    )
    frame = pd.DataFrame(
        [
            {
                "T": r.T,
                "min_product_num": r.min_product_num,
                "min_product_den": r.min_product_den,
                "p_coords": " ".join(str(x) for x in r.p_coords),
                "q_coords": " ".join(str(x) for x in r.q_coords),
            }
            for r in payload.rows
        ],
        columns=["T", "min_product_num", "min_product_den", "p_coords", "q_coords"],
    )
    emit(ctx, payload, frame, default="csv")


@cli.command()
@click.argument("name", type=click.Choice(sorted(PAYLOADS)))
def schema(name: str) -> None:
    """JSON schema of a command's payload."""
    click.echo(json.dumps(PAYLOADS[name].model_json_schema(), indent=2, sort_keys=True))


def run(argv: Sequence[str]) -> CommandResult:
    """Invoke the CLI in-process and capture standard output."""
    buffer = io.StringIO()
    with contextlib.redirect_stdout(buffer):
        try:
            rv = cli.main(args=list(argv), prog_name="deltabound", standalone_mode=False)
            code = rv if isinstance(rv, int) else 0
        except click.UsageError as e:
            e.show()
            code = 2
        except click.ClickException as e:
            e.show()
            code = 1
        except click.Abort:
            code = 1
        except SystemExit as e:
            code = e.code if isinstance(e.code, int) else 1
    return CommandResult(exit_code=code, payload=buffer.getvalue())


def main(argv: Optional[List[str]] = None) -> None:
    result = run(argv if argv is not None else sys.argv[1:])
    sys.stdout.write(result.payload)
    sys.exit(result.exit_code)


if __name__ == "__main__":
    cli()
