"""
Survey Command
==============
Tabulate plane existence against MUB evidence over a range of d.
"""
from pathlib import Path
from typing import Annotated, Optional

import typer

from mubplane.exceptions import VerificationFailure
from mubplane.survey.consistency import Consistency
from mubplane.survey.report import render_markdown, table_to_csv, table_to_json
from mubplane.survey.table import survey
from mubplane.utils.context import get_config, get_console, output_format, output_path
from mubplane.utils.errors import exit_on_error
from mubplane.utils.output import OutputFormat, emit

app = typer.Typer(help="Plane/MUB correspondence survey", invoke_without_command=True)

_STYLES = {Consistency.CONSISTENT: "green", Consistency.OPEN: "yellow", Consistency.REFUTES: "bold red"}


@app.callback()
def run(
    ctx: typer.Context,
    d_from: Annotated[int, typer.Option("--from", help="First dimension")] = 2,
    d_to: Annotated[int, typer.Option("--to", help="Last dimension")] = 9,
    search: Annotated[bool, typer.Option("--search/--no-search", help="Search non-prime-power dimensions up to the cap")] = False,
    report: Annotated[Optional[Path], typer.Option("--report", help="Also write a Markdown report")] = None,
) -> None:
    """
    🗺️ One row per d: plane status, MUB counts and the consistency verdict.

    Exits 1 if any row refutes the correspondence.

    Examples:
        mubplane survey --from 2 --to 9 --search
        mubplane --format csv survey --to 12 --out survey.csv
    """
    with exit_on_error():
        table = survey(d_from, d_to, enable_search=search, config=get_config(ctx))

        console = get_console(ctx)
        for row in table.rows:
            style = _STYLES[row.consistency]
            console.print(f"d={row.d:>3}  {row.plane_status.value:<22} [{style}]{row.consistency.value}[/{style}]")

        text = table_to_csv(table) if output_format(ctx) is OutputFormat.CSV else table_to_json(table)
        emit(text, output_path(ctx))
        if report is not None:
            report.parent.mkdir(parents=True, exist_ok=True)
            report.write_text(render_markdown(table), encoding="utf-8")

        if table.has_refutation:
            refuting = [r.d for r in table.rows if r.consistency is Consistency.REFUTES]
            raise VerificationFailure(f"certified complete MUB sets in plane-free dimensions {refuting}")
