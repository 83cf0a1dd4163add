"""CLI interface for sabar."""

from __future__ import annotations

import logging
from collections.abc import Iterator, Sequence
from contextlib import contextmanager
from pathlib import Path
from typing import Any

import click
from pydantic import ValidationError

from sabar.config import Config
from sabar.errors import SabarError
from sabar.io.run_config import RunConfig
from sabar.persistence.filtration import Barcode


def _setup_logging(level: str) -> None:
    from rich.console import Console
    from rich.logging import RichHandler

    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(message)s",
        handlers=[RichHandler(console=Console(stderr=True), show_path=False)],
        force=True,
    )


def _error(message: str) -> None:
    from rich.console import Console

    Console(stderr=True).print(f"[red]{message}[/red]", highlight=False)


@contextmanager
def _guard(ctx: click.Context) -> Iterator[None]:
    """Report sabar errors in red and exit with their code."""
    try:
        yield
    except SabarError as e:
        _error(f"{type(e).__name__}: {e}")
        ctx.exit(e.exit_code)


def _run_config(ctx: click.Context, **fields: Any) -> RunConfig:
    config: Config = ctx.obj["config"]
    fields.setdefault("threads", config.threads)
    try:
        return RunConfig(**{k: v for k, v in fields.items() if v is not None})
    except ValidationError as e:
        messages = "; ".join(err["msg"] for err in e.errors())
        raise click.UsageError(messages, ctx) from e


def _parse_only(ctx: click.Context) -> bool:
    return bool(ctx.obj.get("parse_only"))


def _split(text: str | None) -> tuple[str, ...] | None:
    if text is None:
        return None
    return tuple(part.strip() for part in text.split(";") if part.strip())


def _emit(run: RunConfig, barcodes: list[Barcode]) -> None:
    from rich.console import Console
    from rich.table import Table

    from sabar.io.export import emit_barcode_json, emit_barcode_svg

    if run.json_out is not None:
        run.json_out.write_bytes(emit_barcode_json(barcodes))
    if run.svg_out is not None:
        run.svg_out.write_bytes(emit_barcode_svg(barcodes))

    console = Console()
    table = Table(title="Barcodes")
    table.add_column("p", justify="right")
    table.add_column("Birth", style="cyan")
    table.add_column("Death", style="green")
    table.add_column("Mult", justify="right")
    for b in barcodes:
        for bar in b.bars_sorted():
            table.add_row(str(b.p), str(bar.birth), str(bar.death), str(bar.mult))
    console.print(table)


def _output_options(f: Any) -> Any:
    f = click.option("--svg", "svg_out", type=click.Path(dir_okay=False), help="Write SVG plot")(f)
    f = click.option("--json", "json_out", type=click.Path(dir_okay=False), help="Write JSON")(f)
    f = click.option(
        "--max-dim", type=int, default=1, show_default=True, help="Top homology dimension"
    )(f)
    return f


@click.group(invoke_without_command=True)
@click.option("--config", "-c", type=click.Path(), help="Path to config file")
@click.option("--verbose", "-v", is_flag=True, help="Log progress")
@click.option("--debug", is_flag=True, help="Log everything")
@click.pass_context
def main(ctx: click.Context, config: str | None, verbose: bool, debug: bool) -> None:
    """sabar - exact persistent-homology barcodes.

    Barcodes of finite simplicial filtrations, of sub-level filtrations of
    semi-algebraic sets, and of Rips filtrations of point clouds.
    """
    ctx.ensure_object(dict)
    ctx.obj["config"] = Config.load(Path(config)) if config else Config.load()
    if not _parse_only(ctx):
        level = "DEBUG" if debug else "INFO" if verbose else ctx.obj["config"].log_level
        _setup_logging(level)

    if ctx.invoked_subcommand is None:
        click.echo(ctx.get_help())


@main.group()
def barcode() -> None:
    """Compute barcodes."""


@barcode.command("simplicial")
@click.argument("filtration_file", type=click.Path(exists=True, dir_okay=False))
@_output_options
@click.pass_context
def barcode_simplicial(
    ctx: click.Context,
    filtration_file: str,
    max_dim: int,
    json_out: str | None,
    svg_out: str | None,
) -> RunConfig | None:
    """Barcodes of a finite filtration file."""
    from sabar.io.formats import read_filtration

    run = _run_config(
        ctx,
        verb="simplicial",
        input_path=filtration_file,
        max_dim=max_dim,
        json_out=json_out,
        svg_out=svg_out,
    )
    if _parse_only(ctx):
        return run
    with _guard(ctx):
        assert run.input_path is not None
        f = read_filtration(run.input_path.read_text())
        _emit(run, f.barcodes(run.max_dim))
    return None


@barcode.command("sublevel")
@click.option("--formula", help="Closed formula, e.g. 'x^2 + y^2 - 1 <= 0'")
@click.option("--poly", help="Filtering polynomial")
@click.option("--radius", help="R in P_0 = sum X^2 - R (rational)")
@click.option("--grid", "grid_n", type=int, help="Subdivisions per axis")
@click.option("--levels", help="Explicit rational levels 'a;b;...' (grid-only path)")
@_output_options
@click.pass_context
def barcode_sublevel(
    ctx: click.Context,
    formula: str | None,
    poly: str | None,
    radius: str | None,
    grid_n: int | None,
    levels: str | None,
    max_dim: int,
    json_out: str | None,
    svg_out: str | None,
) -> RunConfig | None:
    """Barcodes of the sub-level filtration of a semi-algebraic set."""
    from sabar.algebra.parser import parse_poly
    from sabar.formulas.ast import ClosedFormula
    from sabar.formulas.parser import parse_formula
    from sabar.pipeline.barcode import barcode_semialgebraic
    from sabar.pipeline.family import SemialgebraicInput

    config: Config = ctx.obj["config"]
    run = _run_config(
        ctx,
        verb="sublevel",
        formula=formula,
        poly=poly,
        radius=radius,
        grid_n=grid_n if grid_n is not None else config.grid_n,
        levels=_split(levels),
        max_dim=max_dim,
        json_out=json_out,
        svg_out=svg_out,
        approx_width=config.approx_width,
    )
    if _parse_only(ctx):
        return run
    with _guard(ctx):
        assert run.formula and run.poly and run.radius and run.grid_n
        inp = SemialgebraicInput(
            ClosedFormula.from_formula(parse_formula(run.formula), config.dnf_atom_budget),
            parse_poly(run.poly),
            run.radius,
            run.max_dim,
        )
        barcodes = barcode_semialgebraic(
            inp,
            run.grid_n,
            run.levels,
            max_exact_dim=config.max_exact_dim,
            approx_width=run.approx_width,
            threads=run.threads,
        )
        _emit(run, barcodes)
    return None


@barcode.command("rips")
@click.option("--points", "points_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--steps", type=int, help="Keep at most this many thresholds")
@_output_options
@click.pass_context
def barcode_rips(
    ctx: click.Context,
    points_path: str | None,
    steps: int | None,
    max_dim: int,
    json_out: str | None,
    svg_out: str | None,
) -> RunConfig | None:
    """Barcodes of the Rips filtration of a point cloud (squared distances)."""
    from sabar.io.formats import read_points
    from sabar.pipeline.rips import rips_filtration

    run = _run_config(
        ctx,
        verb="rips",
        points_path=points_path,
        steps=steps,
        max_dim=max_dim,
        json_out=json_out,
        svg_out=svg_out,
    )
    if _parse_only(ctx):
        return run
    with _guard(ctx):
        assert run.points_path is not None
        points = read_points(run.points_path.read_text())
        f = rips_filtration(points, run.max_dim, run.steps)
        _emit(run, f.barcodes(run.max_dim))
    return None


@main.group()
def roots() -> None:
    """Real roots of univariate polynomials."""


@roots.command("order")
@click.option("--polys", help="Polynomials separated by ';'")
@click.pass_context
def roots_order(ctx: click.Context, polys: str | None) -> RunConfig | None:
    """Print all real roots in increasing order as Thom encodings."""
    from rich.console import Console
    from rich.table import Table

    from sabar.algebra.parser import parse_poly
    from sabar.roots.thom import approximate, order_roots

    run = _run_config(ctx, verb="roots-order", polys=_split(polys))
    if _parse_only(ctx):
        return run
    with _guard(ctx):
        encodings = order_roots(parse_poly(text) for text in run.polys)
        console = Console()
        table = Table(title="Real roots")
        table.add_column("#", justify="right", style="dim")
        table.add_column("Polynomial", style="cyan")
        table.add_column("Signs of derivatives")
        table.add_column("Interval")
        table.add_column("Approx", style="green", justify="right")
        for i, t in enumerate(encodings):
            signs = " ".join("+" if s > 0 else "-" if s < 0 else "0" for s in t.der_signs)
            table.add_row(str(i), str(t.poly), signs, f"[{t.lo}, {t.hi}]", approximate(t))
        console.print(table)
    return None


@main.group()
def formula() -> None:
    """Univariate formulas."""


@formula.command("make-closed")
@click.option("--formula", "text", help="Univariate formula with a closed realization")
@click.pass_context
def formula_make_closed(ctx: click.Context, text: str | None) -> RunConfig | None:
    """Rewrite a formula with closed realization using weak inequalities only."""
    from rich.console import Console

    from sabar.formulas.closure import make_closed
    from sabar.formulas.parser import parse_formula
    from sabar.formulas.realization import realize_univariate

    config: Config = ctx.obj["config"]
    run = _run_config(ctx, verb="make-closed", formula=text)
    if _parse_only(ctx):
        return run
    with _guard(ctx):
        assert run.formula is not None
        psi = make_closed(parse_formula(run.formula), budget=config.dnf_atom_budget)
        console = Console()
        console.print(str(psi), highlight=False)
        console.print(f"[dim]realization: {realize_univariate(psi.to_formula())}[/dim]")
    return None


def parse_args(argv: Sequence[str]) -> RunConfig:
    """Validate a command line without running it.

    Raises ``click.UsageError`` (exit code 2) for unknown or missing options and
    invalid values.
    """
    result = main.main(
        args=list(argv), prog_name="sabar", standalone_mode=False, obj={"parse_only": True}
    )
    if not isinstance(result, RunConfig):
        raise click.UsageError("no command given")
    return result
