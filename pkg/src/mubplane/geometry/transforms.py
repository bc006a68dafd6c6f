"""
Plane Transformations
=====================
Affinization: delete a line (the line at infinity) and all its points.
Dual affinization: delete a point and every line through it, i.e. delete
a line of the dual plane.
"""
from __future__ import annotations

import logging

from mubplane.exceptions import DomainError, PreconditionError
from mubplane.geometry.axioms import AxiomFailure, verify_projective_plane
from mubplane.geometry.incidence import IncidenceStructure, dualize, restrict

logger = logging.getLogger(__name__)


def _require_plane(s: IncidenceStructure) -> None:
    result = verify_projective_plane(s)
    if isinstance(result, AxiomFailure):
        raise PreconditionError(f"input is not a projective plane (axiom {result.axiom} fails: {result.witness})")


def affinize(s: IncidenceStructure, line_at_infinity: int) -> IncidenceStructure:
    """Delete ``line_at_infinity`` and every point on it.

    Raises:
        DomainError: If the line id is out of range.
        PreconditionError: If ``s`` is not a projective plane.
    """
    if not 0 <= line_at_infinity < s.line_count:
        raise DomainError(f"line {line_at_infinity} does not exist (structure has {s.line_count} lines)")
    _require_plane(s)
    on_line = set(s.points_on(line_at_infinity))
    points = [p for p in range(s.point_count) if p not in on_line]
    lines = [j for j in range(s.line_count) if j != line_at_infinity]
    logger.debug("affinize: removed line %d and %d points", line_at_infinity, len(on_line))
    return restrict(s, points, lines)


def affinize_dual(s: IncidenceStructure, point: int) -> IncidenceStructure:
    """Delete ``point`` and every line through it.

    The result is the dual of an affine plane: ``dualize`` of it verifies
    as an affine plane of the same order.

    Raises:
        DomainError: If the point id is out of range.
        PreconditionError: If ``s`` is not a projective plane.
    """
    if not 0 <= point < s.point_count:
        raise DomainError(f"point {point} does not exist (structure has {s.point_count} points)")
    return dualize(affinize(dualize(s), point))
