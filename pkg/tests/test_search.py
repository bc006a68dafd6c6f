"""
Tests for the MUB search: parameterization, cost, analytic gradient and the
restarted descent.
"""
import numpy as np
import pytest
from pydantic import ValidationError

from mubplane.exceptions import DomainError, PreconditionError
from mubplane.mub.checks import check_mub_set, check_orthonormal
from mubplane.mub.construct import construct_mub_set, pauli_eigenbases, standard_basis
from mubplane.mub.models import Basis, MubSet
from mubplane.search.config import SearchConfig
from mubplane.search.cost import cost_and_gradient, cost_gradient, mub_cost, parameter_cost
from mubplane.search.optimizer import (
    CONVERGED,
    _trial_step,
    optimize,
    run_restart,
    search_ladder,
    search_max_mubs,
)
from mubplane.search.parameters import (
    BasisParameters,
    pack_generator,
    parameter_count,
    unpack_generator,
)


def _numerical_gradient(p: BasisParameters, h: float = 1e-5) -> np.ndarray:
    grad = np.zeros(p.values.size)
    for k in range(p.values.size):
        step = np.zeros(p.values.size)
        step[k] = h
        plus = parameter_cost(BasisParameters(p.dimension, p.values + step))
        minus = parameter_cost(BasisParameters(p.dimension, p.values - step))
        grad[k] = (plus - minus) / (2 * h)
    return grad


class TestParameters:
    def test_count(self):
        assert parameter_count(3) == 9

    def test_generator_is_hermitian(self, rng):
        h = unpack_generator(rng.standard_normal(16), 4)
        assert np.allclose(h, h.conj().T)
        assert np.array_equal(pack_generator(h), pack_generator(unpack_generator(pack_generator(h), 4)))

    def test_packing_order(self):
        h = unpack_generator(np.array([1.0, 2.0, 3.0, 4.0]), 2)
        assert h[0, 0] == 1 and h[1, 1] == 2
        assert h[0, 1] == 3 + 4j and h[1, 0] == 3 - 4j

    def test_unitaries(self, rng):
        p = BasisParameters.random(5, 3, rng)
        for u in p.unitaries():
            assert check_orthonormal(Basis(u), 1e-10).passed

    def test_zero_generators_give_identity(self):
        p = BasisParameters.zeros(3, 2)
        assert p.basis_count == 3
        for u in p.unitaries():
            assert np.allclose(u, np.eye(3))

    def test_mub_set_starts_with_identity(self, rng):
        s = BasisParameters.random(3, 2, rng).mub_set()
        assert len(s) == 3 and s.bases[0] == standard_basis(3)

    def test_from_mub_set(self):
        s = construct_mub_set(3)
        p = BasisParameters.from_mub_set(s)
        for u, b in zip(p.unitaries(), s.bases[1:]):
            assert np.abs(u - b.matrix).max() < 1e-10

    def test_rejects_bad_length(self):
        with pytest.raises(DomainError):
            BasisParameters(3, np.zeros(10))

    def test_rejects_mixed_shapes(self):
        with pytest.raises(DomainError):
            BasisParameters.from_unitaries([np.eye(2), np.eye(3)])


class TestCost:
    def test_identity_pair(self):
        assert mub_cost(MubSet(2, (standard_basis(2), standard_basis(2)))) == pytest.approx(1.0)

    def test_zero_on_mubs(self):
        assert mub_cost(pauli_eigenbases()) < 1e-28
        assert mub_cost(construct_mub_set(4)) < 1e-25

    def test_single_basis(self):
        assert mub_cost(MubSet(2, (standard_basis(2),))) == 0.0

    def test_rejects_non_orthonormal(self):
        with pytest.raises(PreconditionError):
            mub_cost(MubSet(2, (standard_basis(2), Basis(np.array([[1, 1], [0, 1]])))))

    @pytest.mark.parametrize("d", [2, 3, 4])
    def test_zero_generators(self, d):
        # every pair is (I, I)
        expected = d * (1 - 1 / d) ** 2 + (d * d - d) / d**2
        assert parameter_cost(BasisParameters.zeros(d, 1)) == pytest.approx(expected)
        assert parameter_cost(BasisParameters.zeros(d, 2)) == pytest.approx(3 * expected)

    def test_parameter_cost_matches_set_cost(self, rng):
        p = BasisParameters.random(4, 2, rng)
        assert parameter_cost(p) == pytest.approx(mub_cost(p.mub_set()), rel=1e-12)


class TestGradient:
    """Analytic gradient against central differences."""

    @pytest.mark.parametrize("seed", range(20))
    def test_matches_finite_differences(self, seed):
        rng = np.random.default_rng(seed)
        d = 2 + seed % 3
        p = BasisParameters.random(d, 1 + seed % 2, rng)
        analytic = cost_gradient(p)
        numeric = _numerical_gradient(p)
        assert np.linalg.norm(analytic - numeric) / np.linalg.norm(analytic) < 1e-5

    def test_cost_agrees(self, rng):
        p = BasisParameters.random(3, 2, rng)
        cost, _ = cost_and_gradient(p)
        assert cost == pytest.approx(parameter_cost(p), rel=1e-12)

    def test_vanishes_on_exact_set(self):
        p = BasisParameters.from_mub_set(construct_mub_set(3))
        assert np.abs(cost_gradient(p)).max() < 1e-8


class TestSearchConfig:
    def test_defaults(self):
        config = SearchConfig(dimension=3, target_count=4)
        assert config.restarts == 20 and config.step_rule == "barzilai-borwein"

    def test_target_above_bound(self):
        with pytest.raises(ValidationError):
            SearchConfig(dimension=3, target_count=5)

    def test_unknown_field(self):
        with pytest.raises(ValidationError):
            SearchConfig(dimension=3, target_count=2, colour="blue")

    def test_retarget_revalidates(self):
        config = SearchConfig(dimension=3, target_count=2, restarts=4)
        assert config.retarget(5, 6).restarts == 4
        with pytest.raises(ValidationError):
            config.retarget(2, 4)


class TestOptimize:
    def test_pair_in_dimension_two(self):
        result = optimize(SearchConfig(dimension=2, target_count=2, restarts=2))
        assert result.converged
        assert check_mub_set(result.best_set, 1e-4).passed

    def test_three_bases_in_dimension_two(self):
        result = optimize(SearchConfig(dimension=2, target_count=3, restarts=3))
        assert result.converged
        assert result.best_cost < 1e-10
        assert len(result.best_set) == 3
        assert check_mub_set(result.best_set, 1e-4).passed

    def test_deterministic(self):
        config = SearchConfig(dimension=3, target_count=3, restarts=3, max_iterations=200)
        first, second = optimize(config), optimize(config)
        assert first.per_restart_costs == second.per_restart_costs
        assert first.best_cost == second.best_cost

    def test_workers_reproduce_sequential(self):
        config = SearchConfig(dimension=3, target_count=3, restarts=4, max_iterations=200)
        parallel = optimize(config.model_copy(update={"workers": 3}))
        sequential = optimize(config)
        assert set(parallel.per_restart_costs) == set(sequential.per_restart_costs)
        assert parallel.best_cost == sequential.best_cost

    def test_accepted_steps_decrease_cost(self):
        seen: dict[int, list[float]] = {}
        config = SearchConfig(dimension=3, target_count=4, restarts=2, max_iterations=100)
        optimize(config, trace=lambda it, restart, cost: seen.setdefault(restart, []).append(cost))
        for costs in seen.values():
            assert all(b < a for a, b in zip(costs, costs[1:]))

    def test_adaptive_step_rule(self):
        config = SearchConfig(dimension=2, target_count=2, restarts=1, step_rule="adaptive")
        outcome = run_restart(config, 0)
        assert outcome.stop_reason == CONVERGED

    def test_max_iterations(self):
        config = SearchConfig(dimension=4, target_count=5, restarts=1, max_iterations=3)
        result = optimize(config)
        assert result.iterations_used <= 3
        assert result.to_dict()["stop_reasons"] == ["max_iterations"]

    def test_result_json(self):
        result = optimize(SearchConfig(dimension=2, target_count=2, restarts=2, seed=7))
        data = result.to_dict()
        assert data["seed_used"] == 7
        assert len(data["per_restart_costs"]) == 2
        assert data["best_set"]["d"] == 2


class TestStepRule:
    """How the first trial step of an iteration is chosen."""

    def test_first_step_is_initial_step(self):
        config = SearchConfig(dimension=2, target_count=2, initial_step=0.3)
        assert _trial_step(config, None, None, None) == 0.3

    @pytest.mark.parametrize("decay,expected", [(0.5, 0.5), (0.25, 1.0), (1.0, 0.25)])
    def test_adaptive_grows_by_step_decay(self, decay, expected):
        config = SearchConfig(dimension=2, target_count=2, step_rule="adaptive", step_decay=decay)
        assert _trial_step(config, 0.25, np.ones(3), np.ones(3)) == pytest.approx(expected)

    def test_barzilai_borwein_step(self):
        config = SearchConfig(dimension=2, target_count=2)
        dx, dg = np.array([1.0, 0.0]), np.array([0.5, 0.0])
        assert _trial_step(config, 0.1, dx, dg) == pytest.approx(2.0)

    def test_barzilai_borwein_falls_back_without_curvature(self):
        config = SearchConfig(dimension=2, target_count=2, step_decay=0.5)
        dx, dg = np.array([1.0, 0.0]), np.array([-1.0, 0.0])
        assert _trial_step(config, 0.1, dx, dg) == pytest.approx(0.2)

    def test_step_decay_changes_adaptive_trajectory(self):
        base = SearchConfig(dimension=3, target_count=3, restarts=1, max_iterations=30, step_rule="adaptive")
        slow = run_restart(base.model_copy(update={"step_decay": 0.9}), 0)
        fast = run_restart(base.model_copy(update={"step_decay": 0.5}), 0)
        assert slow.cost != fast.cost


class TestCostCertification:
    """Zero cost and a passing certification describe the same sets."""

    @pytest.mark.parametrize("d", [2, 3, 4, 5, 7, 8])
    def test_constructed_sets(self, d):
        s = construct_mub_set(d)
        assert mub_cost(s) <= 1e-12
        assert check_mub_set(s, 1e-6).passed

    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_perturbed_sets(self, d, rng):
        exact = BasisParameters.from_mub_set(construct_mub_set(d))
        nudged = BasisParameters(d, exact.values + 1e-3 * rng.standard_normal(exact.values.size))
        s = nudged.mub_set()
        assert mub_cost(s) > 1e-12
        assert not check_mub_set(s, 1e-6).passed

    @pytest.mark.parametrize("d,m", [(2, 2), (3, 3), (4, 2), (6, 3)])
    def test_random_sets(self, d, m, rng):
        s = BasisParameters.random(d, m - 1, rng).mub_set()
        assert mub_cost(s) > 1e-12
        assert not check_mub_set(s, 1e-6).passed

    def test_search_result_agrees(self):
        result = optimize(SearchConfig(dimension=3, target_count=3, restarts=2, convergence_threshold=1e-20))
        assert result.converged
        assert mub_cost(result.best_set) <= 1e-12
        assert check_mub_set(result.best_set, 1e-6).passed


class TestSearchLadder:
    def test_dimension_two(self):
        base = SearchConfig(dimension=2, target_count=2, restarts=3)
        ladder = search_ladder(2, base)
        assert [r.target_count for r in ladder] == [2, 3]
        assert search_max_mubs(2, base) == 3

    @pytest.mark.slow
    @pytest.mark.parametrize("d", [2, 3, 4, 5])
    def test_complete_sets_at_default_settings(self, d):
        assert search_max_mubs(d, SearchConfig(dimension=d, target_count=2)) == d + 1


@pytest.mark.slow
class TestDimensionSix:
    """Three bases are found in d = 6, a fourth is not (default settings)."""

    def test_three_bases(self):
        result = optimize(SearchConfig(dimension=6, target_count=3))
        assert result.converged

    def test_four_bases(self):
        result = optimize(SearchConfig(dimension=6, target_count=4))
        assert (result.config.restarts, result.config.max_iterations) == (20, 5000)
        assert not result.converged
        assert min(result.per_restart_costs) > 1e-4

    def test_max_mubs(self):
        assert search_max_mubs(6, SearchConfig(dimension=6, target_count=2)) == 3
