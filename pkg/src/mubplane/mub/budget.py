"""Tomographic measurement budget of a d-level system."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from typing import Any

from mubplane.algebra.numbers import gaussian_binomial
from mubplane.exceptions import DomainError


@dataclass(frozen=True)
class MeasurementBudget:
    """A density matrix has d²-1 real parameters; each measurement yields d-1 independent probabilities."""

    dimension: int
    density_matrix_parameters: int
    outcomes_per_measurement: int
    measurements_needed: int

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)


def measurement_budget(d: int) -> MeasurementBudget:
    """(d²-1, d-1, d+1), with d+1 cross-checked against the point count of PG(1, d)."""
    if d < 2:
        raise DomainError(f"dimension must be at least 2, got {d}")
    parameters = d * d - 1
    outcomes = d - 1
    needed, remainder = divmod(parameters, outcomes)
    if remainder or needed != gaussian_binomial(1, 0, d):
        raise ArithmeticError(f"measurement count {parameters}/{outcomes} disagrees with [2,1]_{d}")
    return MeasurementBudget(d, parameters, outcomes, needed)
