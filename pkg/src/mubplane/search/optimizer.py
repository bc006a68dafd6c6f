"""
MUB Search
==========
Gradient descent with backtracking over sets of m bases in dimension d,
the first basis frozen at the identity.

Each restart draws its own generators from ``default_rng([seed, restart])``,
so a restart's trajectory does not depend on which thread runs it or on
how many restarts precede it. A failure to converge is a result, not an
error.
"""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from mubplane.mub.models import MubSet
from mubplane.search.config import SearchConfig
from mubplane.search.cost import cost_and_gradient, parameter_cost
from mubplane.search.parameters import BasisParameters

logger = logging.getLogger(__name__)

TraceCallback = Callable[[int, int, float], None]

# Backtracking gives up once the trial step falls below this.
MIN_STEP = 1e-16
# Both step rules shrink a rejected trial step by this factor.
BACKTRACK_FACTOR = 0.5

CONVERGED = "converged"
STALLED = "stalled"
MAX_ITERATIONS = "max_iterations"
LINE_SEARCH = "line_search"


@dataclass(frozen=True, eq=False)
class RestartOutcome:
    restart: int
    cost: float
    iterations: int
    stop_reason: str
    parameters: BasisParameters


@dataclass(frozen=True, eq=False)
class SearchResult:
    """Best restart of one search plus the per-restart record.

    ``iterations_used`` belongs to the best restart.
    """

    config: SearchConfig
    best_cost: float
    best_set: MubSet
    converged: bool
    iterations_used: int
    per_restart_costs: tuple[float, ...]
    per_restart_iterations: tuple[int, ...] = field(default=())
    stop_reasons: tuple[str, ...] = field(default=())

    @property
    def seed_used(self) -> int:
        return self.config.seed

    @property
    def target_count(self) -> int:
        return self.config.target_count

    def to_dict(self) -> dict[str, Any]:
        return {
            "config": self.config.to_dict(),
            "best_cost": self.best_cost,
            "converged": self.converged,
            "iterations_used": self.iterations_used,
            "per_restart_costs": list(self.per_restart_costs),
            "per_restart_iterations": list(self.per_restart_iterations),
            "stop_reasons": list(self.stop_reasons),
            "seed_used": self.seed_used,
            "best_set": self.best_set.to_dict(),
        }


def _trial_step(
    config: SearchConfig,
    accepted: float | None,
    delta_x: np.ndarray | None,
    delta_g: np.ndarray | None,
) -> float:
    if accepted is None:
        return config.initial_step
    if config.step_rule == "barzilai-borwein" and delta_x is not None and delta_g is not None:
        curvature = float(delta_x @ delta_g)
        if curvature > 0:
            return float(delta_x @ delta_x) / curvature
    return accepted / config.step_decay


def run_restart(config: SearchConfig, restart: int, trace: TraceCallback | None = None) -> RestartOutcome:
    """One descent trajectory. Accepted steps strictly decrease the cost."""
    d, free = config.dimension, config.target_count - 1
    rng = np.random.default_rng([config.seed, restart])
    params = BasisParameters.random(d, free, rng, config.init_scale)
    x = params.values.copy()
    cost, grad = cost_and_gradient(params)
    history = [cost]
    if trace is not None:
        trace(0, restart, cost)

    accepted: float | None = None
    delta_x: np.ndarray | None = None
    delta_g: np.ndarray | None = None
    reason = MAX_ITERATIONS
    iteration = 0
    while iteration < config.max_iterations:
        if cost < config.convergence_threshold:
            reason = CONVERGED
            break
        step = _trial_step(config, accepted, delta_x, delta_g)
        while step >= MIN_STEP:
            candidate = x - step * grad
            trial_cost = parameter_cost(BasisParameters(d, candidate))
            if trial_cost < cost:
                break
            step *= BACKTRACK_FACTOR
        else:
            reason = LINE_SEARCH
            break

        iteration += 1
        new_cost, new_grad = cost_and_gradient(BasisParameters(d, candidate))
        delta_x, delta_g = candidate - x, new_grad - grad
        x, cost, grad, accepted = candidate, new_cost, new_grad, step
        history.append(cost)
        if trace is not None:
            trace(iteration, restart, cost)

        if len(history) > config.stall_window:
            old = history[-config.stall_window - 1]
            if old > 0 and (old - cost) / old < config.stall_threshold:
                reason = STALLED
                break
    else:
        if cost < config.convergence_threshold:
            reason = CONVERGED

    logger.debug("restart %d: cost %.3e after %d iterations (%s)", restart, cost, iteration, reason)
    return RestartOutcome(restart, cost, iteration, reason, BasisParameters(d, x))


def optimize(config: SearchConfig, *, trace: TraceCallback | None = None) -> SearchResult:
    """Run every restart and keep the lowest cost.

    With ``workers`` > 1 restarts run on a thread pool; outcomes are merged
    in restart order, so the record is the same as a sequential run.
    """
    restarts = range(config.restarts)
    if config.workers > 1 and config.restarts > 1:
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            outcomes = list(pool.map(lambda r: run_restart(config, r, trace), restarts))
    else:
        outcomes = [run_restart(config, r, trace) for r in restarts]
    outcomes.sort(key=lambda o: o.restart)

    best = min(outcomes, key=lambda o: (o.cost, o.restart))
    result = SearchResult(
        config=config,
        best_cost=best.cost,
        best_set=best.parameters.mub_set(),
        converged=best.cost < config.convergence_threshold,
        iterations_used=best.iterations,
        per_restart_costs=tuple(o.cost for o in outcomes),
        per_restart_iterations=tuple(o.iterations for o in outcomes),
        stop_reasons=tuple(o.stop_reason for o in outcomes),
    )
    logger.info(
        "d=%d m=%d: best cost %.3e over %d restarts (%s)",
        config.dimension,
        config.target_count,
        result.best_cost,
        config.restarts,
        "converged" if result.converged else "not converged",
    )
    return result


def search_ladder(d: int, base_config: SearchConfig) -> list[SearchResult]:
    """Results for m = 2, 3, ... up to and including the first m that fails to converge."""
    results = []
    for m in range(2, d + 2):
        result = optimize(base_config.retarget(d, m))
        results.append(result)
        if not result.converged:
            break
    return results


def search_max_mubs(d: int, base_config: SearchConfig) -> int:
    """Largest m for which the search converged; 1 if even a pair failed."""
    converged = [r.target_count for r in search_ladder(d, base_config) if r.converged]
    return max(converged, default=1)
