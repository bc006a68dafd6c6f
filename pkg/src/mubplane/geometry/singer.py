"""
Singer Difference Sets
======================
Cyclic models of PG(2, q): a perfect (q²+q+1, q+1, 1) difference set D
whose translates D + t are the lines of the plane.

Field route: with g primitive in GF(q^3), the exponents i < q²+q+1 for
which Tr_{GF(q^3)/GF(q)}(g^i) = 0 form a Singer difference set. A
brute-force search over small moduli serves as an independent oracle.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from math import gcd
from typing import Any

import numpy as np

from mubplane.algebra.field import DEFAULT_FIELD_ORDER_MAX, FieldSpec, build_field, primitive_element, trace
from mubplane.exceptions import CapacityError, DomainError, PreconditionError
from mubplane.geometry.incidence import IncidenceStructure

logger = logging.getLogger(__name__)

BRUTE_FORCE_ORDER_MAX = 5


@dataclass(frozen=True)
class DifferenceSet:
    """A set of residues modulo ``modulus``, stored sorted and without repeats."""

    modulus: int
    residues: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.modulus < 1:
            raise DomainError(f"modulus must be positive, got {self.modulus}")
        residues = tuple(sorted(set(int(r) for r in self.residues)))
        if len(residues) != len(self.residues):
            raise DomainError("residues must be distinct")
        if residues and not (0 <= residues[0] and residues[-1] < self.modulus):
            raise DomainError(f"residues must lie in [0, {self.modulus})")
        object.__setattr__(self, "residues", residues)

    @property
    def size(self) -> int:
        return len(self.residues)

    def difference_tally(self) -> np.ndarray:
        """How often each residue arises as r_i - r_j with i ≠ j."""
        r = np.array(self.residues, dtype=np.int64)
        diffs = (r[:, None] - r[None, :]) % self.modulus
        mask = ~np.eye(len(r), dtype=bool)
        return np.bincount(diffs[mask], minlength=self.modulus)

    def is_perfect(self) -> bool:
        """Every nonzero residue is a difference exactly once, and v = k² - k + 1."""
        k = self.size
        if self.modulus != k * k - k + 1 or k < 2:
            return False
        tally = self.difference_tally()
        return bool((tally[1:] == 1).all())

    def to_dict(self) -> dict[str, Any]:
        return {"v": self.modulus, "residues": list(self.residues)}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> DifferenceSet:
        return cls(int(data["v"]), tuple(int(r) for r in data["residues"]))


def canonicalize(ds: DifferenceSet) -> DifferenceSet:
    """Lexicographically least image containing 0 under x ↦ u·x + t, u a unit mod v."""
    v = ds.modulus
    best: tuple[int, ...] | None = None
    for u in (u for u in range(1, v + 1) if gcd(u, v) == 1):
        scaled = [(u * r) % v for r in ds.residues]
        for anchor in scaled:
            image = tuple(sorted((x - anchor) % v for x in scaled))
            if best is None or image < best:
                best = image
    return DifferenceSet(v, best if best is not None else ())


def singer_difference_set(spec: FieldSpec, *, order_max: int = DEFAULT_FIELD_ORDER_MAX) -> DifferenceSet:
    """Singer difference set of PG(2, q) from the trace-zero powers of a primitive element of GF(q^3).

    Raises:
        CapacityError: If q^3 exceeds ``order_max``.
    """
    q = spec.order
    cube = build_field(spec.characteristic, 3 * spec.degree, order_max=order_max)
    g = primitive_element(cube)
    v = q * q + q + 1
    residues = []
    power = cube.one
    for i in range(v):
        if trace(power, spec.degree).is_zero():
            residues.append(i)
        power = power * g
    ds = DifferenceSet(v, tuple(residues))
    if ds.size != q + 1 or not ds.is_perfect():
        raise ArithmeticError(f"trace construction over GF({q}^3) did not give a perfect difference set")
    logger.debug("Singer set for q=%d: %s", q, ds.residues)
    return canonicalize(ds)


def brute_force_difference_set(q: int) -> DifferenceSet | None:
    """Search all (q+1)-subsets of Z_v containing 0 for a perfect difference set; canonical form or None."""
    if q < 2:
        raise DomainError(f"order must be at least 2, got {q}")
    if q > BRUTE_FORCE_ORDER_MAX:
        raise CapacityError(f"brute-force search limited to q <= {BRUTE_FORCE_ORDER_MAX}", q, BRUTE_FORCE_ORDER_MAX)
    v = q * q + q + 1
    for rest in combinations(range(1, v), q):
        candidate = DifferenceSet(v, (0, *rest))
        if candidate.is_perfect():
            return canonicalize(candidate)
    return None


def plane_from_difference_set(ds: DifferenceSet) -> IncidenceStructure:
    """Cyclic plane: points are residues mod v, line t is D + t.

    Raises:
        PreconditionError: If ``ds`` is not a perfect difference set.
    """
    if not ds.is_perfect():
        tally = ds.difference_tally()
        repeated = [int(r) for r in np.flatnonzero(tally[1:] != 1) + 1]
        raise PreconditionError(
            f"not a perfect difference set mod {ds.modulus}: residues {repeated[:5]} are not differences exactly once"
        )
    v = ds.modulus
    members = np.zeros(v, dtype=bool)
    members[list(ds.residues)] = True
    points = np.arange(v)
    incidence = members[(points[:, None] - points[None, :]) % v]
    return IncidenceStructure(
        incidence,
        tuple(str(p) for p in range(v)),
        tuple(f"D+{t}" for t in range(v)),
    )

