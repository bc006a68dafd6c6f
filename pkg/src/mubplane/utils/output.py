"""
Output Helpers
==============
Serialize payloads as JSON or CSV and send them to ``--out`` or stdout.
"""
from __future__ import annotations

import csv
import io
import json
from enum import Enum
from pathlib import Path
from typing import Any, Iterable, Optional, Sequence

import typer

from mubplane.exceptions import UsageError


class OutputFormat(str, Enum):
    JSON = "json"
    CSV = "csv"


def dumps_json(payload: Any) -> str:
    return json.dumps(payload, indent=2) + "\n"


def rows_to_csv(header: Sequence[str], rows: Iterable[Sequence[Any]]) -> str:
    """CSV text with ``header`` first; None becomes an empty cell, booleans are written as JSON spells them."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buffer.getvalue()


def _cell(value: Any) -> Any:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return value


def emit(text: str, out: Optional[Path] = None) -> None:
    """Write ``text`` to ``out`` or stdout."""
    if out is None:
        typer.echo(text, nl=False)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text, encoding="utf-8")


def load_json(path: Path) -> Any:
    """Read a JSON artifact.

    Raises:
        UsageError: Missing file or malformed JSON.
    """
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError as e:
        raise UsageError(f"{path} does not exist") from e
    except json.JSONDecodeError as e:
        raise UsageError(f"{path} is not valid JSON: {e}") from e
