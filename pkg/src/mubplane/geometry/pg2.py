"""
Desarguesian Planes PG(2, q)
============================
Points are the 1-dimensional subspaces of GF(q)^3, lines the 2-dimensional
ones. Both are named by a normalized vector (first nonzero coordinate 1);
a line [u] contains the point (x) iff u·x = 0.
"""
from __future__ import annotations

import logging
from itertools import product

import numpy as np

from mubplane.algebra.field import FieldSpec, field_tables
from mubplane.algebra.numbers import gaussian_binomial
from mubplane.exceptions import CapacityError
from mubplane.geometry.incidence import IncidenceStructure

logger = logging.getLogger(__name__)

DEFAULT_PLANE_ORDER_MAX = 32


def normalized_vectors(q: int) -> np.ndarray:
    """Representatives of the projective points of GF(q)^3 in lexicographic order.

    Coordinates are element indices; index 1 is the field's unit.
    """
    reps = []
    for vector in product(range(q), repeat=3):
        first = next((c for c in vector if c != 0), None)
        if first == 1:
            reps.append(vector)
    return np.array(reps, dtype=np.int64)


def build_pg2(spec: FieldSpec, *, order_max: int = DEFAULT_PLANE_ORDER_MAX) -> IncidenceStructure:
    """Construct PG(2, q) over the field ``spec``.

    Raises:
        CapacityError: If q exceeds ``order_max``.
    """
    q = spec.order
    if q > order_max:
        raise CapacityError(f"PG(2,{q}) exceeds the plane order cap {order_max}", q, order_max)
    tables = field_tables(spec)
    reps = normalized_vectors(q)

    # dot[u, x] = sum_k u_k * x_k over GF(q)
    dot = np.zeros((len(reps), len(reps)), dtype=np.int64)
    for k in range(3):
        dot = tables.add[dot, tables.mul[reps[:, None, k], reps[None, :, k]]]
    incidence = (dot == 0).T

    points = gaussian_binomial(2, 0, q)
    lines = gaussian_binomial(2, 1, q)
    if incidence.shape != (points, lines):
        raise ArithmeticError(f"PG(2,{q}) has shape {incidence.shape}, expected {(points, lines)}")
    logger.debug("PG(2,%d): %d points, %d lines", q, points, lines)

    point_labels = tuple("(" + ",".join(map(str, r)) + ")" for r in reps)
    line_labels = tuple("[" + ",".join(map(str, r)) + "]" for r in reps)
    return IncidenceStructure(incidence, point_labels, line_labels)
