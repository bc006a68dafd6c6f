"""
Plane Axiom Verification
========================
Exhaustive checks of the projective and affine plane axioms.

Failures are returned as values (``AxiomFailure``) carrying a concrete
witness; nothing here raises on a non-plane. Pair checks are computed as
point × point and line × line intersection counts over the incidence table.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

import networkx as nx
import numpy as np

from mubplane.geometry.incidence import IncidenceStructure

logger = logging.getLogger(__name__)

DISTINCT_POINTS = "distinct_points"
DISTINCT_LINES = "distinct_lines"
TWO_POINTS_ONE_LINE = "two_points_one_line"
TWO_LINES_ONE_POINT = "two_lines_one_point"
QUADRANGLE = "quadrangle"
PARALLEL = "parallel"
TRIANGLE = "triangle"
COUNTING = "counting"
PARALLEL_CLASSES = "parallel_classes"


@dataclass(frozen=True)
class AxiomCheck:
    axiom: str
    passed: bool
    witness: dict[str, Any] | None = None

    def to_dict(self) -> dict[str, Any]:
        return {"axiom": self.axiom, "passed": self.passed, "witness": self.witness}


@dataclass(frozen=True)
class AxiomFailure:
    """The first violated axiom and its counterexample."""

    axiom: str
    witness: dict[str, Any]
    axioms_checked: tuple[AxiomCheck, ...]

    passed = False

    def to_dict(self) -> dict[str, Any]:
        return {
            "passed": False,
            "failed_axiom": self.axiom,
            "witness": self.witness,
            "axioms_checked": [c.to_dict() for c in self.axioms_checked],
        }


@dataclass(frozen=True)
class PlaneCertificate:
    """Proof that a structure is a projective plane of order ``order``."""

    order: int
    points_per_line: int
    lines_per_point: int
    point_count: int
    line_count: int
    axioms_checked: tuple[AxiomCheck, ...]

    passed = True

    def to_dict(self) -> dict[str, Any]:
        return {
            "passed": True,
            "kind": "projective",
            "order": self.order,
            "points_per_line": self.points_per_line,
            "lines_per_point": self.lines_per_point,
            "points": self.point_count,
            "lines": self.line_count,
            "axioms_checked": [c.to_dict() for c in self.axioms_checked],
        }


@dataclass(frozen=True)
class AffineCertificate:
    """Proof that a structure is an affine plane of order ``order``."""

    order: int
    point_count: int
    line_count: int
    points_per_line: int
    parallel_classes: tuple[tuple[int, ...], ...]
    axioms_checked: tuple[AxiomCheck, ...] = field(default=())

    passed = True

    def to_dict(self) -> dict[str, Any]:
        return {
            "passed": True,
            "kind": "affine",
            "order": self.order,
            "points": self.point_count,
            "lines": self.line_count,
            "points_per_line": self.points_per_line,
            "parallel_classes": [list(c) for c in self.parallel_classes],
            "axioms_checked": [c.to_dict() for c in self.axioms_checked],
        }


class _Ledger:
    """Accumulates AxiomChecks until the first failure."""

    def __init__(self) -> None:
        self.checks: list[AxiomCheck] = []

    def ok(self, axiom: str) -> None:
        self.checks.append(AxiomCheck(axiom, True))

    def fail(self, axiom: str, witness: dict[str, Any]) -> AxiomFailure:
        self.checks.append(AxiomCheck(axiom, False, witness))
        logger.debug("axiom %s failed: %s", axiom, witness)
        return AxiomFailure(axiom, witness, tuple(self.checks))


def _first_duplicate(rows: np.ndarray) -> tuple[int, int] | None:
    seen: dict[bytes, int] = {}
    for i, row in enumerate(rows):
        key = np.packbits(row).tobytes() + bytes([row.size % 8])
        if key in seen:
            return seen[key], i
        seen[key] = i
    return None


def _pair_violation(common: np.ndarray) -> tuple[int, int, int] | None:
    """First (i, j), i < j, whose intersection count is not exactly one."""
    if common.shape[0] < 2:
        return None
    iu, ju = np.triu_indices(common.shape[0], 1)
    bad = np.flatnonzero(common[iu, ju] != 1)
    if bad.size == 0:
        return None
    k = bad[0]
    return int(iu[k]), int(ju[k]), int(common[iu[k], ju[k]])


def _check_distinct(s: IncidenceStructure, ledger: _Ledger) -> AxiomFailure | None:
    dup = _first_duplicate(s.incidence)
    if dup is not None:
        return ledger.fail(DISTINCT_POINTS, {"points": list(dup)})
    ledger.ok(DISTINCT_POINTS)
    dup = _first_duplicate(s.incidence.T)
    if dup is not None:
        return ledger.fail(DISTINCT_LINES, {"lines": list(dup)})
    ledger.ok(DISTINCT_LINES)
    return None


def _collinear(table: np.ndarray, *points: int) -> bool:
    return bool(np.logical_and.reduce(table[list(points)], axis=0).any())


def find_quadrangle(s: IncidenceStructure) -> tuple[int, int, int, int] | None:
    """Four points, no three on a common line, or None."""
    table = s.incidence
    n = s.point_count
    for a, b in combinations(range(n), 2):
        for c in range(b + 1, n):
            if _collinear(table, a, b, c):
                continue
            for d in range(c + 1, n):
                if not (
                    _collinear(table, a, b, d) or _collinear(table, a, c, d) or _collinear(table, b, c, d)
                ):
                    return a, b, c, d
    return None


def find_triangle(s: IncidenceStructure) -> tuple[int, int, int] | None:
    """Three points not on a common line, or None."""
    table = s.incidence
    for a, b, c in combinations(range(s.point_count), 3):
        if not _collinear(table, a, b, c):
            return a, b, c
    return None


def verify_projective_plane(s: IncidenceStructure) -> PlaneCertificate | AxiomFailure:
    """Check the projective plane axioms exhaustively.

    Two points lie on exactly one line, two lines meet in exactly one
    point, and a quadrangle exists. Distinctness of points and lines is
    then recorded; on success the order d is derived and the counting
    consequences (d+1 per line and point, d²+d+1 of each)
    are confirmed.
    """
    ledger = _Ledger()
    m = s.incidence.astype(np.int64)
    bad = _pair_violation(m @ m.T)
    if bad is not None:
        return ledger.fail(TWO_POINTS_ONE_LINE, {"points": [bad[0], bad[1]], "common_lines": bad[2]})
    ledger.ok(TWO_POINTS_ONE_LINE)

    bad = _pair_violation(m.T @ m)
    if bad is not None:
        return ledger.fail(TWO_LINES_ONE_POINT, {"lines": [bad[0], bad[1]], "common_points": bad[2]})
    ledger.ok(TWO_LINES_ONE_POINT)

    quad = find_quadrangle(s)
    if quad is None:
        return ledger.fail(QUADRANGLE, {"points": s.point_count, "reason": "no four points with no three collinear"})
    ledger.ok(QUADRANGLE)

    if (failure := _check_distinct(s, ledger)) is not None:
        return failure

    line_sizes = m.sum(axis=0)
    point_degrees = m.sum(axis=1)
    order = int(line_sizes[0]) - 1
    expected = order * order + order + 1
    if (
        (line_sizes != order + 1).any()
        or (point_degrees != order + 1).any()
        or s.point_count != expected
        or s.line_count != expected
    ):
        return ledger.fail(
            COUNTING,
            {
                "order": order,
                "line_sizes": sorted(set(line_sizes.tolist())),
                "point_degrees": sorted(set(point_degrees.tolist())),
                "points": s.point_count,
                "lines": s.line_count,
            },
        )
    ledger.ok(COUNTING)
    return PlaneCertificate(
        order=order,
        points_per_line=order + 1,
        lines_per_point=order + 1,
        point_count=s.point_count,
        line_count=s.line_count,
        axioms_checked=tuple(ledger.checks),
    )


def parallel_classes(s: IncidenceStructure) -> list[list[int]]:
    """Group lines into classes of pairwise disjoint lines.

    Classes are the connected components of the graph joining disjoint
    lines, sorted by their smallest line. On an affine plane these are the
    parallel classes; elsewhere a component need not be pairwise disjoint.
    """
    m = s.incidence.astype(np.int64)
    meets = (m.T @ m) > 0
    graph = nx.Graph()
    graph.add_nodes_from(range(s.line_count))
    rows, cols = np.nonzero(np.triu(~meets, 1))
    graph.add_edges_from(zip(rows.tolist(), cols.tolist()))
    return sorted((sorted(c) for c in nx.connected_components(graph)), key=lambda c: c[0])


def verify_affine_plane(s: IncidenceStructure) -> AffineCertificate | AxiomFailure:
    """Check the affine plane axioms exhaustively.

    Two points lie on exactly one line; through a point off a line there
    is exactly one line missing it (Playfair); a triangle exists. On
    success the order d is derived and d² points, d²+d lines and d+1
    parallel classes of d lines each are confirmed.
    """
    ledger = _Ledger()
    m = s.incidence.astype(np.int64)
    bad = _pair_violation(m @ m.T)
    if bad is not None:
        return ledger.fail(TWO_POINTS_ONE_LINE, {"points": [bad[0], bad[1]], "common_lines": bad[2]})
    ledger.ok(TWO_POINTS_ONE_LINE)

    disjoint = ((m.T @ m) == 0).astype(np.int64)
    # parallels[p, L]: lines through p that miss L
    parallels = m @ disjoint
    off = np.argwhere((m == 0) & (parallels != 1))
    if off.size:
        p, line = (int(x) for x in off[0])
        return ledger.fail(PARALLEL, {"point": p, "line": line, "parallels": int(parallels[p, line])})
    ledger.ok(PARALLEL)

    if find_triangle(s) is None:
        return ledger.fail(TRIANGLE, {"points": s.point_count, "reason": "all points collinear"})
    ledger.ok(TRIANGLE)

    if (failure := _check_distinct(s, ledger)) is not None:
        return failure

    line_sizes = m.sum(axis=0)
    order = int(line_sizes[0]) if s.line_count else 0
    if (
        order < 2
        or (line_sizes != order).any()
        or (m.sum(axis=1) != order + 1).any()
        or s.point_count != order * order
        or s.line_count != order * order + order
    ):
        return ledger.fail(
            COUNTING,
            {
                "order": order,
                "line_sizes": sorted(set(line_sizes.tolist())),
                "points": s.point_count,
                "lines": s.line_count,
            },
        )
    ledger.ok(COUNTING)

    classes = parallel_classes(s)
    for cls in classes:
        block = disjoint[np.ix_(cls, cls)] + np.eye(len(cls), dtype=np.int64)
        if len(cls) != order or (block == 0).any():
            return ledger.fail(PARALLEL_CLASSES, {"class": cls, "expected_size": order})
    if len(classes) != order + 1:
        return ledger.fail(PARALLEL_CLASSES, {"classes": len(classes), "expected": order + 1})
    ledger.ok(PARALLEL_CLASSES)
    return AffineCertificate(
        order=order,
        point_count=s.point_count,
        line_count=s.line_count,
        points_per_line=order,
        parallel_classes=tuple(tuple(c) for c in classes),
        axioms_checked=tuple(ledger.checks),
    )
