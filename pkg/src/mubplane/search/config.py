"""
Search Configuration
====================
Validated settings for one numerical MUB search.
"""
from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

StepRule = Literal["barzilai-borwein", "adaptive"]


class SearchConfig(BaseModel):
    """Settings for ``optimize``.

    Attributes:
        dimension: Hilbert space dimension d.
        target_count: Number of bases m, counting the fixed identity basis.
        restarts: Independent random starts.
        max_iterations: Iteration cap per restart.
        initial_step: First trial step of the line search.
        step_decay: Growth factor of the adaptive rule: after an accepted step s the
            next trial step is s / step_decay. Rejected trial steps are halved
            under either rule, independent of this value.
        convergence_threshold: A cost below this counts as success.
        stall_threshold: Stop when the relative cost drop over ``stall_window`` iterations is below this.
        stall_window: Iterations the stall test looks back over.
        seed: Root of the per-restart random streams.
        step_rule: How each iteration's first trial step is chosen.
        workers: Threads used for restarts (1 = sequential, bit-reproducible).
        init_scale: Standard deviation of the random generator entries.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    dimension: int = Field(..., ge=2, description="Hilbert space dimension d")
    target_count: int = Field(..., ge=2, description="Total bases m including the identity")
    restarts: int = Field(default=20, ge=1)
    max_iterations: int = Field(default=5000, ge=1)
    initial_step: float = Field(default=1.0, gt=0.0)
    step_decay: float = Field(default=0.5, gt=0.0, le=1.0)
    convergence_threshold: float = Field(default=1e-10, ge=0.0)
    stall_threshold: float = Field(default=1e-12, ge=0.0)
    stall_window: int = Field(default=50, ge=1)
    seed: int = Field(default=20240601, ge=0, lt=2**64)
    step_rule: StepRule = Field(default="barzilai-borwein")
    workers: int = Field(default=1, ge=1)
    init_scale: float = Field(default=1.0, gt=0.0)

    @model_validator(mode="after")
    def _target_within_bound(self) -> SearchConfig:
        if self.target_count > self.dimension + 1:
            raise ValueError(
                f"target_count {self.target_count} exceeds d+1 = {self.dimension + 1}"
            )
        return self

    def retarget(self, dimension: int, target_count: int) -> SearchConfig:
        """Same settings for another (d, m), re-validated."""
        return SearchConfig(**{**self.model_dump(), "dimension": dimension, "target_count": target_count})

    def to_dict(self) -> dict[str, Any]:
        return self.model_dump()
