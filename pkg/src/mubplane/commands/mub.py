"""
MUB Commands
============
Construct complete sets of mutually unbiased bases, check stored sets,
and report the tomographic measurement budget.
"""
from pathlib import Path
from typing import Annotated

import typer
from rich.table import Table

from mubplane.exceptions import VerificationFailure
from mubplane.mub.budget import measurement_budget
from mubplane.mub.checks import check_mub_set
from mubplane.mub.construct import construct_mub_set
from mubplane.mub.models import MubSet
from mubplane.utils.context import emit_result, get_config, get_console
from mubplane.utils.errors import exit_on_error
from mubplane.utils.output import load_json

app = typer.Typer(help="Mutually unbiased bases")


@app.command()
def build(
    ctx: typer.Context,
    d: Annotated[int, typer.Argument(help="Dimension (prime power)")],
) -> None:
    """
    🧱 Construct d+1 mutually unbiased bases in a prime-power dimension.

    Examples:
        mubplane mub build 4 --out mub4.json
    """
    with exit_on_error():
        config = get_config(ctx)
        mubs = construct_mub_set(
            d,
            dimension_max=int(config.get("capacity.mub_dimension_max")),
            field_order_max=int(config.get("capacity.field_order_max")),
            tolerance=float(config.get("tolerance.construct")),
        )
        report = check_mub_set(mubs, float(config.get("tolerance.certify")))
        get_console(ctx).print(
            f"[green]✓[/green] {len(mubs)} bases in d={d}, max deviation {report.overall_max_deviation:.2e}"
        )
        emit_result(ctx, mubs.to_dict())


@app.command()
def verify(
    ctx: typer.Context,
    path: Annotated[Path, typer.Argument(help="MUB set JSON")],
    workers: Annotated[int, typer.Option("--workers", "-w", help="Threads for the pairwise checks")] = 1,
) -> None:
    """
    🔬 Check orthonormality and pairwise unbiasedness; exits 1 on failure.
    """
    with exit_on_error():
        mubs = MubSet.from_dict(load_json(path))
        report = check_mub_set(mubs, float(get_config(ctx).get("tolerance.certify")), workers=workers)

        table = Table(title=f"{len(mubs)} bases in d={mubs.dimension}")
        table.add_column("Pair")
        table.add_column("Deviation", justify="right")
        table.add_column("", justify="center")
        for pair in report.pair_results:
            mark = "[green]✓[/green]" if pair.passed else "[red]✗[/red]"
            table.add_row(f"{pair.first}-{pair.second}", f"{pair.deviation:.2e}", mark)
        get_console(ctx).print(table)

        emit_result(ctx, report.to_dict())
        if not report.passed:
            raise VerificationFailure(
                f"max deviation {report.overall_max_deviation:.3e} exceeds tolerance {report.tolerance:.1e}"
            )


@app.command()
def budget(
    ctx: typer.Context,
    d: Annotated[int, typer.Argument(help="Dimension")],
) -> None:
    """
    📏 Parameters and measurements needed for state tomography in dimension d.
    """
    with exit_on_error():
        emit_result(ctx, measurement_budget(d).to_dict())
