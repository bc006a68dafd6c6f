"""
Survey Table
============
One row per dimension: plane existence, constructed and searched MUB
counts, and the consistency verdict.
"""
from __future__ import annotations

import logging
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from mubplane import __version__
from mubplane.algebra.numbers import PlaneStatus, classify_order, plane_existence_status
from mubplane.exceptions import UsageError
from mubplane.mub.checks import check_mub_set
from mubplane.mub.construct import construct_mub_set
from mubplane.search.config import SearchConfig
from mubplane.search.optimizer import search_ladder
from mubplane.survey.consistency import Consistency, conjecture_consistency
from mubplane.utils.config import Config

logger = logging.getLogger(__name__)

ROW_FIELDS = ("d", "prime_power", "plane_status", "mub_constructed", "mub_searched", "consistency")


class SurveyRow(BaseModel):
    """One dimension of the survey.

    The first six fields are the table proper; the rest is evidence.
    """

    model_config = ConfigDict(frozen=True)

    d: int = Field(..., ge=2)
    prime_power: bool
    plane_status: PlaneStatus
    mub_constructed: Optional[int] = None
    mub_searched: Optional[int] = None
    consistency: Consistency

    certified_count: Optional[int] = Field(default=None, description="Size of a set that passed check_mub_set")
    certification_deviation: Optional[float] = Field(default=None, ge=0.0)
    search_costs: Dict[int, float] = Field(default_factory=dict, description="Best cost per searched m")
    plane_detail: str = ""

    @model_validator(mode="after")
    def _check_invariants(self) -> SurveyRow:
        if (self.mub_constructed is not None) != self.prime_power:
            raise ValueError("mub_constructed is present exactly for prime powers")
        if self.consistency is Consistency.REFUTES and not (
            self.plane_status.ruled_out and (self.certified_count or 0) >= self.d + 1
        ):
            raise ValueError("Refutes needs a ruled-out plane and a certified complete set")
        return self

    def values(self) -> tuple[Any, ...]:
        """The six table fields, enums as their string values."""
        return (
            self.d,
            self.prime_power,
            self.plane_status.value,
            self.mub_constructed,
            self.mub_searched,
            self.consistency.value,
        )

    def evidence(self) -> dict[str, Any]:
        return {
            "d": self.d,
            "certified_count": self.certified_count,
            "certification_deviation": self.certification_deviation,
            "search_costs": {str(m): c for m, c in sorted(self.search_costs.items())},
            "plane_detail": self.plane_detail,
        }


class SurveyTable(BaseModel):
    """Rows over a contiguous range of d plus the settings that produced them."""

    model_config = ConfigDict(frozen=True)

    rows: tuple[SurveyRow, ...]
    provenance: Dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _contiguous(self) -> SurveyTable:
        ds = [r.d for r in self.rows]
        if ds and ds != list(range(ds[0], ds[0] + len(ds))):
            raise ValueError(f"rows must cover a contiguous range without duplicates, got {ds}")
        return self

    @property
    def has_refutation(self) -> bool:
        return any(r.consistency is Consistency.REFUTES for r in self.rows)

    def to_dict(self) -> dict[str, Any]:
        return {
            "rows": [dict(zip(ROW_FIELDS, r.values())) for r in self.rows],
            "evidence": [r.evidence() for r in self.rows],
            "provenance": self.provenance,
        }


def _survey_row(
    d: int,
    *,
    config: Config,
    search_settings: Optional[Dict[str, Any]],
) -> SurveyRow:
    verdict = plane_existence_status(d)
    prime_power = classify_order(d) is not None
    tol = float(config.get("tolerance.certify"))

    constructed = certified = searched = None
    deviation: Optional[float] = None
    costs: Dict[int, float] = {}

    if prime_power:
        mubs = construct_mub_set(
            d,
            dimension_max=int(config.get("capacity.mub_dimension_max")),
            field_order_max=int(config.get("capacity.field_order_max")),
            tolerance=float(config.get("tolerance.construct")),
        )
        report = check_mub_set(mubs, tol)
        constructed = len(mubs)
        deviation = report.overall_max_deviation
        if report.passed:
            certified = len(mubs)
    elif search_settings is not None:
        base = SearchConfig(dimension=d, target_count=2, **search_settings)
        ladder = search_ladder(d, base)
        costs = {r.target_count: r.best_cost for r in ladder}
        searched = max((r.target_count for r in ladder if r.converged), default=1)
        if searched == d + 1:
            # A converged complete set still has to pass the certification tolerance.
            report = check_mub_set(ladder[-1].best_set, tol)
            deviation = report.overall_max_deviation
            if report.passed:
                certified = d + 1

    consistency = conjecture_consistency(d, verdict.status, certified_count=certified, searched_max=searched)
    return SurveyRow(
        d=d,
        prime_power=prime_power,
        plane_status=verdict.status,
        mub_constructed=constructed,
        mub_searched=searched,
        consistency=consistency,
        certified_count=certified,
        certification_deviation=deviation,
        search_costs=costs,
        plane_detail=verdict.detail,
    )


def survey(
    d_min: int,
    d_max: int,
    enable_search: bool = False,
    search_overrides: Optional[Dict[str, Any]] = None,
    *,
    config: Optional[Config] = None,
) -> SurveyTable:
    """Build the survey table for d_min ≤ d ≤ d_max.

    Searching only happens for non-prime-power d at or below
    ``survey.search_cap``; larger d get no search evidence.

    Raises:
        UsageError: If not 2 ≤ d_min ≤ d_max, or if the range holds a prime
            power above ``capacity.mub_dimension_max`` or ``capacity.field_order_max``
            (checked before any row is built).
    """
    if not 2 <= d_min <= d_max:
        raise UsageError(f"need 2 <= from <= to, got from={d_min}, to={d_max}")
    config = config or Config()
    # Constructions need both d <= mub_dimension_max and GF(d) within field_order_max.
    mub_cap = min(int(config.get("capacity.mub_dimension_max")), int(config.get("capacity.field_order_max")))
    too_large = next((d for d in range(max(d_min, mub_cap + 1), d_max + 1) if classify_order(d) is not None), None)
    if too_large is not None:
        raise UsageError(
            f"d={too_large} is a prime power above the construction cap {mub_cap}; lower --to below "
            f"{too_large} or raise capacity.mub_dimension_max / capacity.field_order_max"
        )
    cap = int(config.get("survey.search_cap"))
    settings = {**config.search_settings(), **(search_overrides or {})}

    rows = []
    for d in range(d_min, d_max + 1):
        search_here = enable_search and d <= cap
        if enable_search and not search_here and classify_order(d) is None:
            logger.warning("d=%d is above the search cap %d; no search evidence", d, cap)
        rows.append(_survey_row(d, config=config, search_settings=settings if search_here else None))
        logger.info("d=%d: %s", d, rows[-1].consistency.value)

    provenance = {
        "version": __version__,
        "range": [d_min, d_max],
        "search_enabled": enable_search,
        "search_cap": cap,
        "search": settings if enable_search else None,
        "seed": settings.get("seed") if enable_search else None,
        "certify_tolerance": float(config.get("tolerance.certify")),
    }
    return SurveyTable(rows=tuple(rows), provenance=provenance)
