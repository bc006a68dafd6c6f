"""
Search Commands
===============
Numerical searches for m mutually unbiased bases in dimension d.
"""
from pathlib import Path
from typing import Annotated, Any, Dict, List, Optional

import typer
from rich.table import Table

from mubplane.mub.models import MubSet
from mubplane.search.config import SearchConfig
from mubplane.search.cost import mub_cost
from mubplane.search.optimizer import optimize, search_ladder
from mubplane.utils.context import emit_result, get_config, get_console
from mubplane.utils.errors import exit_on_error
from mubplane.utils.output import load_json, rows_to_csv

app = typer.Typer(help="Numerical MUB search")

TRACE_HEADER = ("iteration", "restart", "cost")


def _settings(
    ctx: typer.Context,
    restarts: Optional[int],
    max_iterations: Optional[int],
    step_rule: Optional[str],
    workers: Optional[int],
) -> Dict[str, Any]:
    settings = get_config(ctx).search_settings()
    overrides = {"restarts": restarts, "max_iterations": max_iterations, "step_rule": step_rule, "workers": workers}
    settings.update({k: v for k, v in overrides.items() if v is not None})
    return settings


Restarts = Annotated[Optional[int], typer.Option("--restarts", help="Independent random starts")]
MaxIterations = Annotated[Optional[int], typer.Option("--max-iterations", help="Iteration cap per restart")]
StepRule = Annotated[Optional[str], typer.Option("--step-rule", help="barzilai-borwein | adaptive")]
Workers = Annotated[Optional[int], typer.Option("--workers", "-w", help="Threads for restarts")]


@app.command()
def run(
    ctx: typer.Context,
    d: Annotated[int, typer.Argument(help="Dimension")],
    m: Annotated[int, typer.Argument(help="Number of bases, identity included")],
    restarts: Restarts = None,
    max_iterations: MaxIterations = None,
    step_rule: StepRule = None,
    workers: Workers = None,
    trace: Annotated[Optional[Path], typer.Option("--trace", help="Write per-iteration costs as CSV")] = None,
) -> None:
    """
    🎯 Search for m mutually unbiased bases in dimension d.

    Examples:
        mubplane search run 6 3 --restarts 8
        mubplane --seed 7 search run 2 3 --trace costs.csv
    """
    with exit_on_error():
        config = SearchConfig(dimension=d, target_count=m, **_settings(ctx, restarts, max_iterations, step_rule, workers))
        records: List[tuple[int, int, float]] = []
        with get_console(ctx).status(f"[green]Searching d={d}, m={m}..."):
            result = optimize(config, trace=(lambda i, r, c: records.append((i, r, c))) if trace else None)
        if trace is not None:
            trace.parent.mkdir(parents=True, exist_ok=True)
            trace.write_text(rows_to_csv(TRACE_HEADER, sorted(records, key=lambda t: (t[1], t[0]))), encoding="utf-8")

        mark = "[green]converged[/green]" if result.converged else "[yellow]not converged[/yellow]"
        get_console(ctx).print(f"d={d}, m={m}: best cost {result.best_cost:.3e} ({mark})")
        emit_result(ctx, result.to_dict())


@app.command("max")
def max_command(
    ctx: typer.Context,
    d: Annotated[int, typer.Argument(help="Dimension")],
    restarts: Restarts = None,
    max_iterations: MaxIterations = None,
    step_rule: StepRule = None,
    workers: Workers = None,
) -> None:
    """
    📈 Largest m the search reaches in dimension d (m = 2, 3, ... until the first failure).

    A negative result is numerical evidence, not a proof.
    """
    with exit_on_error():
        base = SearchConfig(dimension=d, target_count=2, **_settings(ctx, restarts, max_iterations, step_rule, workers))
        with get_console(ctx).status(f"[green]Searching d={d}..."):
            ladder = search_ladder(d, base)
        best = max((r.target_count for r in ladder if r.converged), default=1)

        table = Table(title=f"Search ladder, d={d}")
        table.add_column("m", justify="right")
        table.add_column("Best cost", justify="right")
        table.add_column("Converged", justify="center")
        for r in ladder:
            table.add_row(str(r.target_count), f"{r.best_cost:.3e}", "[green]✓[/green]" if r.converged else "[red]✗[/red]")
        get_console(ctx).print(table)

        emit_result(
            ctx,
            {
                "d": d,
                "max_mubs": best,
                "seed": base.seed,
                "ladder": [
                    {"m": r.target_count, "best_cost": r.best_cost, "converged": r.converged, "per_restart_costs": list(r.per_restart_costs)}
                    for r in ladder
                ],
            },
            csv_header=("m", "best_cost", "converged"),
            csv_rows=((r.target_count, r.best_cost, r.converged) for r in ladder),
        )


@app.command()
def cost(
    ctx: typer.Context,
    path: Annotated[Path, typer.Argument(help="MUB set JSON")],
) -> None:
    """
    🧮 Least-squares distance of a stored set from mutual unbiasedness.

    Every basis must be orthonormal to ``tolerance.orthonormal``; exits 1 otherwise.
    """
    with exit_on_error():
        mubs = MubSet.from_dict(load_json(path))
        value = mub_cost(mubs, orthonormal_tol=float(get_config(ctx).get("tolerance.orthonormal")))
        get_console(ctx).print(f"{len(mubs)} bases in d={mubs.dimension}: cost {value:.3e}")
        emit_result(ctx, {"d": mubs.dimension, "bases": len(mubs), "cost": value})
