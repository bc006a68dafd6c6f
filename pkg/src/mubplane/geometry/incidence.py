"""
Incidence Structures
====================
Points, lines and a point × line boolean incidence table.

The carrier type for projective planes, affine planes and their duals.
Instances are immutable: the table is stored read-only.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np

from mubplane.exceptions import DomainError


@dataclass(frozen=True, eq=False)
class IncidenceStructure:
    """Immutable incidence structure.

    Attributes:
        incidence: Boolean array, rows are points and columns are lines.
        point_labels: Optional display string per point.
        line_labels: Optional display string per line.
    """

    incidence: np.ndarray
    point_labels: tuple[str, ...] | None = field(default=None)
    line_labels: tuple[str, ...] | None = field(default=None)

    def __post_init__(self) -> None:
        table = np.array(self.incidence, dtype=bool)
        if table.ndim != 2:
            if table.size == 0:
                table = table.reshape(0, 0)
            else:
                raise DomainError(f"incidence table must be two-dimensional, got shape {table.shape}")
        table.setflags(write=False)
        object.__setattr__(self, "incidence", table)
        if self.point_labels is not None:
            object.__setattr__(self, "point_labels", tuple(str(x) for x in self.point_labels))
            if len(self.point_labels) != table.shape[0]:
                raise DomainError("one label per point expected")
        if self.line_labels is not None:
            object.__setattr__(self, "line_labels", tuple(str(x) for x in self.line_labels))
            if len(self.line_labels) != table.shape[1]:
                raise DomainError("one label per line expected")

    @property
    def point_count(self) -> int:
        return int(self.incidence.shape[0])

    @property
    def line_count(self) -> int:
        return int(self.incidence.shape[1])

    def points_on(self, line: int) -> list[int]:
        return [int(p) for p in np.flatnonzero(self.incidence[:, line])]

    def lines_through(self, point: int) -> list[int]:
        return [int(line) for line in np.flatnonzero(self.incidence[point, :])]

    def lines(self) -> list[list[int]]:
        """Every line as its sorted list of points."""
        return [self.points_on(line) for line in range(self.line_count)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IncidenceStructure):
            return NotImplemented
        return (
            self.incidence.shape == other.incidence.shape
            and bool(np.array_equal(self.incidence, other.incidence))
            and self.point_labels == other.point_labels
            and self.line_labels == other.line_labels
        )

    __hash__ = None  # type: ignore[assignment]

    def with_flipped(self, point: int, line: int) -> IncidenceStructure:
        """Copy with one incidence bit toggled (mutation testing helper)."""
        table = self.incidence.copy()
        table[point, line] = not table[point, line]
        return IncidenceStructure(table, self.point_labels, self.line_labels)

    def to_dict(self) -> dict[str, Any]:
        return {
            "points": self.point_count,
            "lines": self.line_count,
            "incidence": self.incidence.astype(int).tolist(),
            "point_labels": list(self.point_labels) if self.point_labels is not None else None,
            "line_labels": list(self.line_labels) if self.line_labels is not None else None,
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> IncidenceStructure:
        points, lines = int(data["points"]), int(data["lines"])
        rows = data.get("incidence") or []
        table = np.array(rows, dtype=int) if points and lines else np.zeros((points, lines), dtype=int)
        if table.shape != (points, lines):
            raise DomainError(f"incidence is {table.shape}, header says {(points, lines)}")
        if not np.isin(table, (0, 1)).all():
            raise DomainError("incidence entries must be 0 or 1")
        return cls(table.astype(bool), data.get("point_labels"), data.get("line_labels"))

    @classmethod
    def from_lines(cls, point_count: int, lines: Sequence[Sequence[int]]) -> IncidenceStructure:
        """Build from an explicit list of lines given as point sets."""
        table = np.zeros((point_count, len(lines)), dtype=bool)
        for j, line in enumerate(lines):
            for p in line:
                if not 0 <= p < point_count:
                    raise DomainError(f"point {p} out of range on line {j}")
                table[p, j] = True
        return cls(table)


def dualize(s: IncidenceStructure) -> IncidenceStructure:
    """Swap points and lines: transpose the table and exchange the labels."""
    return IncidenceStructure(s.incidence.T.copy(), s.line_labels, s.point_labels)


def restrict(s: IncidenceStructure, points: Sequence[int], lines: Sequence[int]) -> IncidenceStructure:
    """Substructure on the given points and lines, labels carried along."""
    pts, lns = list(points), list(lines)
    table = s.incidence[np.ix_(pts, lns)] if pts and lns else np.zeros((len(pts), len(lns)), dtype=bool)
    return IncidenceStructure(
        table,
        tuple(s.point_labels[p] for p in pts) if s.point_labels is not None else None,
        tuple(s.line_labels[j] for j in lns) if s.line_labels is not None else None,
    )
