"""
Config Commands
===============
Show the effective configuration or write it out for reproducible runs.
"""
from pathlib import Path
from typing import Annotated, Optional

import toml
import typer
from rich.syntax import Syntax

from mubplane.exceptions import UsageError
from mubplane.utils.config import CONFIG_FILENAME
from mubplane.utils.context import emit_result, get_config, get_console
from mubplane.utils.errors import exit_on_error

app = typer.Typer(help="Configuration")


@app.command()
def show(ctx: typer.Context) -> None:
    """
    ⚙️ Print the effective configuration (defaults merged with the TOML file).
    """
    with exit_on_error():
        config = get_config(ctx)
        get_console(ctx).print(Syntax(toml.dumps(config.as_dict()), "toml"))
        emit_result(ctx, {"source": str(config.config_path), "config": config.as_dict()})


@app.command()
def init(
    ctx: typer.Context,
    path: Annotated[Optional[Path], typer.Argument(help=f"Target file (default ./{CONFIG_FILENAME})")] = None,
    force: Annotated[bool, typer.Option("--force", "-f", help="Overwrite an existing file")] = False,
) -> None:
    """
    📝 Write the effective configuration to a TOML file.
    """
    with exit_on_error():
        target = path or Path.cwd() / CONFIG_FILENAME
        if target.exists() and not force:
            raise UsageError(f"{target} already exists (use --force to overwrite)")
        written = get_config(ctx).save(target)
        get_console(ctx).print(f"[green]✓[/green] wrote {written}")
