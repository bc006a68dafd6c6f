"""
Conjecture Consistency
======================
Compares the plane side and the MUB side of one dimension.

A complete set of d+1 MUBs is expected exactly when a projective plane of
order d exists. Refutes needs certified evidence against that; search
negatives are evidence but never proof.
"""
from __future__ import annotations

from enum import Enum
from typing import Optional

from mubplane.algebra.numbers import PlaneStatus


class Consistency(str, Enum):
    CONSISTENT = "Consistent"
    OPEN = "Open"
    REFUTES = "Refutes"


def conjecture_consistency(
    d: int,
    plane_status: PlaneStatus,
    *,
    certified_count: Optional[int] = None,
    searched_max: Optional[int] = None,
    proven_bound: Optional[int] = None,
) -> Consistency:
    """Decide one survey row.

    Args:
        d: Dimension / plane order.
        plane_status: Outcome of the plane existence classification.
        certified_count: Size of a MUB set that passed ``check_mub_set``.
        searched_max: Largest m the numerical search converged for.
        proven_bound: A proof-level upper bound on the MUB count, if any.
    """
    complete = d + 1
    exists = plane_status is PlaneStatus.EXISTS_PRIME_POWER
    certified_complete = certified_count is not None and certified_count >= complete
    bound_below = proven_bound is not None and proven_bound < complete

    if plane_status.ruled_out and certified_complete:
        return Consistency.REFUTES
    if exists and bound_below:
        return Consistency.REFUTES
    if exists and certified_complete:
        return Consistency.CONSISTENT
    if plane_status.ruled_out and (bound_below or (searched_max is not None and searched_max < complete)):
        return Consistency.CONSISTENT
    return Consistency.OPEN
