"""
mubplane CLI - Pure Router
==========================
- ZERO commands registered directly in this file.
- All functionality coupled via sub-apps (Groups) from the
  ``mubplane.commands`` entry point group.
- Global options land in ``ctx.obj`` for the sub-apps.
"""
from __future__ import annotations

import importlib
import logging
import sys
from pathlib import Path
from typing import Annotated, Optional

import typer
from rich.console import Console

from mubplane import __version__
from mubplane.utils.config import Config
from mubplane.utils.errors import exit_on_error
from mubplane.utils.logs import configure_logging
from mubplane.utils.output import OutputFormat

logger = logging.getLogger(__name__)

# Unified Panel Mapping (Forced ASCII Ordering)
PANEL_MAP: dict[str, tuple[str, str]] = {
    "field":  ("🔢 [bold green]Finite Fields[/bold green]\nGF(p^n), Gaussian binomials, Bruck-Ryser.", " A. 🟢 Exact Algebra"),
    "plane":  ("🔺 [bold green]Projective Planes[/bold green]\nBuild, verify, dualize, affinize.", " A. 🟢 Exact Algebra"),
    "mub":    ("🧱 [bold blue]Unbiased Bases[/bold blue]\nConstruct and verify MUB sets.", "B. 🟡 Hilbert Space"),
    "search": ("🎯 [bold blue]Numerical Search[/bold blue]\nGradient search for MUBs.", "B. 🟡 Hilbert Space"),
    "survey": ("🗺️ [bold magenta]Correspondence Survey[/bold magenta]\nPlanes against MUBs per d.", "C. 🔵 Survey"),
    "config": ("⚙️ [bold white]Configuration[/bold white]\nShow or write mubplane.toml.", "D. ⚙️ System"),
}

# Module fallback when the package metadata is not installed (source checkouts).
BUILTIN_COMMANDS = {name: f"mubplane.commands.{name}:app" for name in PANEL_MAP}

app = typer.Typer(
    name="mubplane",
    help=f"""
🔺 [bold cyan]mubplane v{__version__}[/bold cyan]

Finite projective planes and [bold]mutually unbiased bases[/bold]:
construct both, verify both, and survey where they agree.
    """,
    add_completion=True,
    rich_markup_mode="rich",
    no_args_is_help=True,
)

console = Console(stderr=True)


def _command_targets() -> dict[str, str]:
    from importlib.metadata import entry_points

    targets = {ep.name: ep.value for ep in entry_points(group="mubplane.commands")}
    return targets or dict(BUILTIN_COMMANDS)


def _register_subapps() -> None:
    """Couples all sub-modules via entry_points. No commands allowed here."""
    for name, target in _command_targets().items():
        module_name, _, attr = target.partition(":")
        try:
            sub_app = getattr(importlib.import_module(module_name), attr or "app")
            help_text, panel = PANEL_MAP.get(name, (f"{name} module", "D. ⚙️ System"))
            app.add_typer(sub_app, name=name, help=help_text, rich_help_panel=panel)
        except Exception as e:
            print(f"[mubplane] WARNING: failed to load plugin '{name}': {e}", file=sys.stderr)


# Execute Router Coupling
_register_subapps()

# ── Global Callbacks ────────────────────────────────────────────────


def version_callback(value: bool) -> None:
    if value:
        typer.echo(f"mubplane {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    ctx: typer.Context,
    config_path: Annotated[Optional[Path], typer.Option("--config", "-c", help="TOML configuration file", envvar="MUBPLANE_CONFIG")] = None,
    seed: Annotated[Optional[int], typer.Option("--seed", help="Search seed (overrides search.seed)")] = None,
    tol: Annotated[Optional[float], typer.Option("--tol", help="Certification tolerance (overrides tolerance.certify)")] = None,
    fmt: Annotated[OutputFormat, typer.Option("--format", help="Payload format")] = OutputFormat.JSON,
    out: Annotated[Optional[Path], typer.Option("--out", "-o", help="Write the payload here instead of stdout")] = None,
    verbose: Annotated[bool, typer.Option("--verbose", "-v")] = False,
    version: Annotated[bool, typer.Option("--version", "-V", callback=version_callback, is_eager=True)] = False,
) -> None:
    configure_logging(verbose)
    with exit_on_error():
        config = Config(config_path)
        if seed is not None:
            config.set("search.seed", seed)
        if tol is not None:
            config.set("tolerance.certify", tol)
    ctx.obj = {"config": config, "console": console, "format": fmt, "out": out, "verbose": verbose}
    logger.debug("configuration source: %s", config.config_path)


# Entry Point
def cli_main() -> None:
    app()


if __name__ == "__main__":
    cli_main()
