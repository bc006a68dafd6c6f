"""
Run Context
===========
The global CLI options as sub-commands see them through ``ctx.obj``.
"""
from __future__ import annotations

from pathlib import Path
from typing import Any, Iterable, Optional, Sequence

import typer
from rich.console import Console

from mubplane.exceptions import UsageError
from mubplane.utils.config import Config
from mubplane.utils.output import OutputFormat, dumps_json, emit, rows_to_csv


def get_config(ctx: typer.Context) -> Config:
    obj = ctx.obj or {}
    if "config" not in obj:
        # Sub-app invoked without the root callback (tests, plugins).
        obj["config"] = Config()
        ctx.obj = obj
    return obj["config"]


def get_console(ctx: typer.Context) -> Console:
    return (ctx.obj or {}).get("console") or Console(stderr=True)


def output_format(ctx: typer.Context) -> OutputFormat:
    return (ctx.obj or {}).get("format", OutputFormat.JSON)


def output_path(ctx: typer.Context) -> Optional[Path]:
    return (ctx.obj or {}).get("out")


def emit_result(
    ctx: typer.Context,
    payload: Any,
    *,
    csv_header: Optional[Sequence[str]] = None,
    csv_rows: Optional[Iterable[Sequence[Any]]] = None,
) -> None:
    """Send the command's payload in the selected format.

    Raises:
        UsageError: CSV requested from a command without a tabular payload.
    """
    if output_format(ctx) is OutputFormat.CSV:
        if csv_header is None or csv_rows is None:
            raise UsageError(f"--format csv is not available for '{ctx.command_path}'")
        emit(rows_to_csv(csv_header, csv_rows), output_path(ctx))
    else:
        emit(dumps_json(payload), output_path(ctx))
