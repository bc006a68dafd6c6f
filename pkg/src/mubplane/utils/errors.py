"""
Error Display Utilities
=======================
Structured, rich-formatted error messages with recovery hints.

Every command funnels library exceptions through ``exit_on_error`` so
the user sees one red panel and the process exits with the code the
exception class declares.
"""
from __future__ import annotations

import logging
from contextlib import contextmanager
from typing import Iterator

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.panel import Panel

from mubplane.exceptions import CapacityError, MubPlaneError, UsageError

logger = logging.getLogger(__name__)

console = Console(stderr=True)

_HINTS: dict[type[MubPlaneError], str] = {
    CapacityError: "Raise the cap in [cyan]mubplane.toml[/cyan] ([bold]mubplane config init[/bold] writes one).",
    UsageError: "Run the command with [bold]--help[/bold] to see valid arguments.",
}


def show_error(
    title: str,
    detail: str,
    *,
    hint: str | None = None,
) -> None:
    """Display a structured error panel with optional recovery guidance.

    Args:
        title: Short error title (e.g., "Capacity Exceeded")
        detail: Explanation of what went wrong
        hint: Actionable fix instruction (Rich markup supported)
    """
    content = f"[bold red]{title}[/bold red]\n\n{detail}"
    if hint:
        content += f"\n\n[bold]💡 Fix:[/bold] {hint}"
    console.print(Panel(content, border_style="red"))


def _title(exc: MubPlaneError) -> str:
    name = type(exc).__name__
    return "".join(" " + c if c.isupper() and i else c for i, c in enumerate(name)).strip()


@contextmanager
def exit_on_error() -> Iterator[None]:
    """Turn mubplane errors into a panel plus the class's exit code."""
    try:
        yield
    except ValidationError as e:
        show_error("Invalid Settings", str(e), hint=_HINTS[UsageError])
        raise typer.Exit(code=UsageError.exit_code) from e
    except MubPlaneError as e:
        logger.debug("command failed", exc_info=True)
        hint = next((h for cls, h in _HINTS.items() if isinstance(e, cls)), None)
        show_error(_title(e), str(e), hint=hint)
        raise typer.Exit(code=e.exit_code) from e
