"""Command line interface"""

import time
from enum import Enum
from typing import Any, Callable, Dict, List, Optional

import click
from loguru import logger
from pydantic import BaseModel, Field, ValidationError
from rich.console import Console
from rich.table import Table

from audit import RunJournal
from catalog import (
    CatalogEntry,
    EntrySource,
    distinguish,
    enumerate_all_graphs,
    enumerate_regular,
    export_catalog,
    verify_against_published,
)
from graphs import Graph, parse_graph6, read_graphs
from invariants import check_all
from polynomial import AlliancePolynomial, alliance_polynomial, alliance_polynomial_naive
from utils.config import Settings, build_settings, set_settings
from utils.errors import AllianceError, BadParams, LineError, PoolSpecError
from utils.logger import setup_logging

__version__ = "0.1.0"


class Command(str, Enum):
    COMPUTE = "compute"
    INVARIANTS = "invariants"
    CATALOG = "catalog"
    VERIFY = "verify"
    DISTINGUISH = "distinguish"


class InputFormat(str, Enum):
    GRAPH6 = "graph6"
    EDGELIST = "edgelist"


class OutputFormat(str, Enum):
    TEXT = "text"
    JSON = "json"


class RunConfig(BaseModel):
    """One command invocation"""

    command: Command
    input_path: str = Field(default="-", description="Input file, '-' for standard input")
    input_format: InputFormat = InputFormat.GRAPH6
    output_format: OutputFormat = OutputFormat.TEXT
    workers: Optional[int] = Field(default=None, ge=0, description="Worker processes, 0 = one per CPU")
    naive: bool = False
    strict: bool = False
    naive_limit: int = Field(default=24, ge=1)
    canonical_limit: int = Field(default=12, ge=1)


def _config(ctx: click.Context, command: Command, **values: Any) -> RunConfig:
    settings: Settings = ctx.obj
    return RunConfig(
        command=command,
        naive_limit=settings.naive_limit,
        canonical_limit=settings.canonical_limit,
        **{key: value for key, value in values.items() if value is not None},
    )


def _run(ctx: click.Context, config: RunConfig, body: Callable[[Dict[str, Any]], int], **extra: Any) -> None:
    """Run a command body, journal the outcome and exit with its code"""
    started = time.perf_counter()
    summary: Dict[str, Any] = {}
    try:
        exit_code = body(summary)
    except AllianceError as e:
        logger.error(f"{config.command.value} failed: {e}")
        click.echo(f"error: {e}", err=True)
        exit_code = e.exit_code

    settings: Settings = ctx.obj
    if settings.journal_path:
        arguments = {**config.model_dump(mode="json"), **extra}
        RunJournal(settings.journal_path).record(
            config.command.value, arguments, exit_code, time.perf_counter() - started, summary
        )
    ctx.exit(exit_code)


def _graphs(config: RunConfig, summary: Dict[str, Any]):
    """Yield ``(line_number, graph)`` pairs, reporting bad lines

    Bad lines end the run under ``--strict``; otherwise they are counted and
    their exit code is kept in ``summary["worst"]``.
    """
    summary.setdefault("graphs", 0)
    summary.setdefault("errors", 0)
    summary.setdefault("worst", 0)
    with click.open_file(config.input_path, "r", encoding="utf-8") as f:
        for line_number, item in read_graphs(f, config.input_format.value):
            if isinstance(item, LineError):
                if config.strict:
                    raise item
                click.echo(f"error: {item}", err=True)
                summary["errors"] += 1
                summary["worst"] = max(summary["worst"], item.exit_code)
                continue
            summary["graphs"] += 1
            yield line_number, item


def _polynomial(g: Graph, config: RunConfig) -> AlliancePolynomial:
    if config.naive:
        return alliance_polynomial_naive(g, limit=config.naive_limit)
    return alliance_polynomial(g, workers=config.workers)


_input_argument = click.argument("input_path", default="-", type=click.Path(allow_dash=True, dir_okay=False))
_format_option = click.option(
    "--format", "input_format",
    type=click.Choice([f.value for f in InputFormat]), default="graph6", show_default=True,
    help="Input format",
)
_output_option = click.option(
    "--output", "output_format",
    type=click.Choice([f.value for f in OutputFormat]), default="text", show_default=True,
    help="Output format",
)
_workers_option = click.option(
    "--workers", type=click.IntRange(min=0), default=None,
    help="Worker processes (0 = one per CPU); overrides ALLIANCE_WORKERS",
)
_strict_option = click.option("--strict", is_flag=True, help="Stop at the first bad input line")


@click.group()
@click.option("--config", "config_file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="YAML settings file")
@click.option("--verbose", "-v", is_flag=True, help="Log at DEBUG level")
@click.option("--journal", type=click.Path(dir_okay=False), default=None, help="Append a JSONL run record")
@click.version_option(version=__version__, prog_name="alliance")
@click.pass_context
def cli(ctx: click.Context, config_file: Optional[str], verbose: bool, journal: Optional[str]):
    """Alliance polynomial engine, invariant checks and cubic catalogs"""
    try:
        settings = build_settings(
            config_file,
            log_level="DEBUG" if verbose else None,
            journal_path=journal,
        )
    except (ValidationError, ValueError, OSError) as e:
        raise click.UsageError(f"Invalid settings: {e}")

    set_settings(settings)
    setup_logging(settings.log_level)
    ctx.obj = settings


@cli.command()
@_input_argument
@_format_option
@_output_option
@click.option("--naive", is_flag=True, help="Sweep every vertex subset")
@_workers_option
@_strict_option
@click.pass_context
def compute(ctx, input_path, input_format, output_format, naive, workers, strict):
    """Print the alliance polynomial of every input graph"""
    config = _config(
        ctx, Command.COMPUTE,
        input_path=input_path, input_format=input_format, output_format=output_format,
        naive=naive, workers=workers, strict=strict,
    )

    def body(summary: Dict[str, Any]) -> int:
        for line_number, g in _graphs(config, summary):
            try:
                p = _polynomial(g, config)
            except AllianceError as e:
                if config.strict:
                    raise LineError(line_number, e)
                click.echo(f"error: line {line_number}: {e}", err=True)
                summary["worst"] = max(summary["worst"], e.exit_code)
                continue
            click.echo(p.render(config.output_format.value))
        return summary.get("worst", 0)

    _run(ctx, config, body)


@cli.command()
@_input_argument
@_format_option
@_output_option
@click.option("--polynomial", "polynomial_path", type=click.Path(exists=True, dir_okay=False), default=None,
              help="JSON polynomial to check against the single input graph")
@click.option("--naive", is_flag=True, help="Sweep every vertex subset")
@_workers_option
@_strict_option
@click.pass_context
def invariants(ctx, input_path, input_format, output_format, polynomial_path, naive, workers, strict):
    """Check the coefficient theorems for every input graph"""
    config = _config(
        ctx, Command.INVARIANTS,
        input_path=input_path, input_format=input_format, output_format=output_format,
        naive=naive, workers=workers, strict=strict,
    )

    def body(summary: Dict[str, Any]) -> int:
        given = None
        if polynomial_path:
            with open(polynomial_path, "r", encoding="utf-8") as f:
                given = AlliancePolynomial.from_json(f.read())

        graphs = list(_graphs(config, summary))
        if given is not None and len(graphs) != 1:
            raise BadParams(f"--polynomial needs exactly one input graph, got {len(graphs)}")

        console = Console()
        failures = 0
        for _, g in graphs:
            p = given if given is not None else _polynomial(g, config)
            report = check_all(g, p)
            failures += len(report.failures)
            if config.output_format == OutputFormat.JSON:
                click.echo(report.to_json())
            else:
                console.print(report.to_table())
                for failure in report.failures:
                    click.echo(f"FAIL {failure.check_id}: {failure.witness}")

        summary["failures"] = failures
        return max(summary.get("worst", 0), 1 if failures else 0)

    _run(ctx, config, body, polynomial=polynomial_path)


@cli.command()
@click.option("--n", "order", type=click.IntRange(min=1), required=True, help="Order")
@click.option("--degree", type=click.IntRange(min=0), default=None,
              help="Vertex degree; omit for every graph of the order")
@click.option("--connected", is_flag=True, help="Connected graphs only")
@_output_option
@click.pass_context
def catalog(ctx, order, degree, connected, output_format):
    """List one graph per isomorphism class with its polynomial"""
    config = _config(ctx, Command.CATALOG, output_format=output_format)

    def body(summary: Dict[str, Any]) -> int:
        if degree is None:
            entries = enumerate_all_graphs(order)
            if connected:
                entries = [e for e in entries if e.connected]
        else:
            entries = enumerate_regular(order, degree, connected_only=connected)
        summary["entries"] = len(entries)
        click.echo(export_catalog(entries, config.output_format.value))
        return 0

    _run(ctx, config, body, n=order, degree=degree, connected=connected)


@cli.command()
@click.option("--order", type=click.Choice(["4", "6", "8", "10"]), required=True,
              help="Order of the cubic table")
@_output_option
@click.pass_context
def verify(ctx, order, output_format):
    """Compare the generated cubic catalog with the embedded table"""
    config = _config(ctx, Command.VERIFY, output_format=output_format)

    def body(summary: Dict[str, Any]) -> int:
        report = verify_against_published(int(order))
        summary.update(report.model_dump(include={"matched", "expected", "collisions"}))
        if config.output_format == OutputFormat.JSON:
            click.echo(report.model_dump_json())
        else:
            click.echo(report.summary_line())
            for text in report.missing:
                click.echo(f"- missing {text}")
            for text in report.extra:
                click.echo(f"+ extra   {text}")
            for erratum in report.errata:
                state = "confirmed" if erratum.confirmed else "unconfirmed"
                click.echo(f"! erratum {erratum.label}: printed {erratum.published}, computed {erratum.computed} ({state})")
            if not report.distinct_evaluations:
                click.echo("A(G;1) values are not pairwise distinct")
        return 0 if report.ok else 1

    _run(ctx, config, body, order=int(order))


def _pool_entries(item: str) -> List[CatalogEntry]:
    """Entries selected by one pool item"""
    kind, _, rest = item.partition(":")
    try:
        if kind == "all":
            return [e for n in range(1, int(rest) + 1) for e in enumerate_all_graphs(n)]
        if kind == "regular":
            n, degree = rest.split(":")
            return enumerate_regular(int(n), int(degree))
        if kind == "cubic":
            return enumerate_regular(int(rest), 3)
        if kind == "graph6":
            return [CatalogEntry.build(parse_graph6(rest), EntrySource.NAMED, label=rest)]
    except ValueError as e:
        if isinstance(e, AllianceError):
            raise
        raise PoolSpecError(f"Bad pool item {item!r}: {e}")
    raise PoolSpecError(f"Unknown pool item {item!r}; expected all:N, regular:N:D, cubic:N or graph6:STRING")


def _groups_table(title: str, groups) -> Table:
    table = Table(title=title)
    table.add_column("key", overflow="fold")
    table.add_column("members", overflow="fold")
    for group in groups:
        table.add_row(group.key, ", ".join(group.members))
    return table


@cli.command(name="distinguish")
@click.argument("pool", nargs=-1, required=True)
@_output_option
@click.pass_context
def distinguish_command(ctx, pool, output_format):
    """Report polynomial and A(G;1) collisions within a pool of graphs"""
    config = _config(ctx, Command.DISTINGUISH, output_format=output_format)

    def body(summary: Dict[str, Any]) -> int:
        entries = [entry for item in pool for entry in _pool_entries(item)]
        report = distinguish(entries)
        summary.update(report.summary())

        if config.output_format == OutputFormat.JSON:
            click.echo(report.model_dump_json())
        else:
            console = Console()
            click.echo(
                f"{report.pool_size} classes, {len(report.by_polynomial)} polynomial collisions, "
                f"{len(report.by_value_at_one)} A(G;1) collisions, {len(report.violations)} theorem violations"
            )
            if report.by_polynomial:
                console.print(_groups_table("Shared polynomials", report.by_polynomial))
            if report.by_value_at_one:
                console.print(_groups_table("Shared A(G;1)", report.by_value_at_one))
            for group in report.violations:
                click.echo(f"VIOLATION {group.key}: {group.reason}")
        return 1 if report.violations else 0

    _run(ctx, config, body, pool=list(pool))


if __name__ == "__main__":
    cli()
