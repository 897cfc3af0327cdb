"""Iterated chaining: weight transfer, mutation hand-offs, early stopping."""

from __future__ import annotations

import pytest

from switchopt import (
    ChainConfig,
    ConfigError,
    Domain,
    GaConfig,
    LocalSearchConfig,
    ObjectiveProbe,
    RngStream,
    RunResult,
    ga,
    hill_climbing,
    iterated_chain,
    random_search,
    should_stop,
)
from switchopt.benchmarks import sphere


class ScriptedAlgo:
    """Fake algorithm handle returning pre-scripted (cost, solution) results.

    Records the init it was called with, and performs one probe evaluation per
    call so the chain's evaluation accounting stays observable.
    """

    def __init__(self, script):
        self.script = list(script)
        self.calls: list[list[int] | None] = []

    def __call__(self, probe, domain, rng, init=None):
        self.calls.append(None if init is None else list(init))
        cost, best = self.script[len(self.calls) - 1]
        probe.evaluate(best)
        return RunResult(list(best), cost, [(0, cost)], 1, 0.0)


DOMAIN = Domain.uniform(-100, 100, 4)


def chain_probe() -> ObjectiveProbe:
    return ObjectiveProbe(sphere, domain=DOMAIN)


def hamming(a, b) -> int:
    return sum(x != y for x, y in zip(a, b))


class TestShouldStop:
    def test_divergent_cost_triggers(self):
        # R is pinned to 100 by tolerance=100: 250 - 100 = 150 > mean(100, 100).
        cfg = ChainConfig(rounds=5, tolerance=100, n_obs=2)
        assert should_stop(250.0, [100.0, 100.0], cfg, RngStream(0)) is True

    def test_flat_cost_never_triggers(self):
        cfg = ChainConfig(rounds=5, tolerance=90, n_obs=2)
        for seed in range(50):  # any R in [90, 100] keeps 100 - R <= 10 < 100
            assert should_stop(100.0, [100.0, 100.0], cfg, RngStream(seed)) is False

    def test_stochastic_boundary(self):
        cfg = ChainConfig(rounds=5, tolerance=90, n_obs=2)
        seed_r90 = next(
            s for s in range(10_000) if RngStream(s).randint(90, 100) == 90
        )
        assert should_stop(191.0, [100.0, 100.0], cfg, RngStream(seed_r90)) is True
        # with R = 100 the same cost no longer trips the rule
        cfg100 = ChainConfig(rounds=5, tolerance=100, n_obs=2)
        assert should_stop(191.0, [100.0, 100.0], cfg100, RngStream(0)) is False

    def test_uses_available_scores_when_short(self):
        cfg = ChainConfig(rounds=5, tolerance=100, n_obs=5)
        # only one score recorded: mean is 10, and 111 - 100 = 11 > 10
        assert should_stop(111.0, [10.0], cfg, RngStream(0)) is True
        assert should_stop(110.0, [10.0], cfg, RngStream(0)) is False

    def test_empty_scores_rejected(self):
        with pytest.raises(ConfigError):
            should_stop(1.0, [], ChainConfig(), RngStream(0))


class TestIteratedChain:
    def test_single_round_runs_each_algorithm_once(self):
        initial = ScriptedAlgo([(50.0, [1, 1, 1, 1])])
        chained = ScriptedAlgo([(20.0, [2, 2, 2, 2])])
        cfg = ChainConfig(rounds=1, random_mutation_probability=0.0)
        result = iterated_chain(initial, chained, chain_probe(), DOMAIN, cfg, RngStream(1))
        assert len(initial.calls) == 1 and initial.calls[0] is None
        assert len(chained.calls) == 1
        # no mutation anywhere: the chained algorithm sees the exact hand-off,
        # and the final round's solution comes back untouched
        assert chained.calls[0] == [1, 1, 1, 1]
        assert result.best == [2, 2, 2, 2]
        assert result.best_cost == 20.0
        assert result.history == [(0, 20.0)]
        assert result.nfe == 2

    def test_post_initial_mutation_probability_one(self):
        initial = ScriptedAlgo([(50.0, [5, 5, 5, 5])])
        chained = ScriptedAlgo([(20.0, [2, 2, 2, 2])])
        cfg = ChainConfig(rounds=1, random_mutation_probability=1.0)
        iterated_chain(initial, chained, chain_probe(), DOMAIN, cfg, RngStream(2))
        assert hamming(chained.calls[0], [5, 5, 5, 5]) == 1

    def test_mid_chain_mutation_is_unconditional(self):
        initial = ScriptedAlgo([(50.0, [1, 1, 1, 1]), (40.0, [1, 1, 1, 1])])
        chained = ScriptedAlgo([(20.0, [3, 3, 3, 3]), (10.0, [3, 3, 3, 3])])
        cfg = ChainConfig(rounds=2, random_mutation_probability=0.0)
        iterated_chain(initial, chained, chain_probe(), DOMAIN, cfg, RngStream(3))
        # round 1's initial algorithm receives round 0's chained output,
        # perturbed at exactly one position
        assert hamming(initial.calls[1], [3, 3, 3, 3]) == 1

    def test_no_stop_on_round_zero(self):
        # Round 0's cost is astronomical, but the rule only applies from round 1.
        initial = ScriptedAlgo([(1e12, [1, 1, 1, 1]), (5.0, [1, 1, 1, 1])])
        chained = ScriptedAlgo([(1e12, [2, 2, 2, 2]), (5.0, [2, 2, 2, 2])])
        cfg = ChainConfig(rounds=2, tolerance=100, random_mutation_probability=0.0)
        result = iterated_chain(initial, chained, chain_probe(), DOMAIN, cfg, RngStream(4))
        assert len(initial.calls) == 2
        assert [cost for _, cost in result.history] == [1e12, 5.0]

    def test_early_stop_breaks_chain(self):
        script_initial = [(100.0, [1, 1, 1, 1]), (2001.0, [1, 1, 1, 1]), (0.0, [0, 0, 0, 0])]
        script_chained = [(100.0, [2, 2, 2, 2]), (2005.0, [2, 2, 2, 2]), (0.0, [0, 0, 0, 0])]
        initial = ScriptedAlgo(script_initial)
        chained = ScriptedAlgo(script_chained)
        cfg = ChainConfig(rounds=3, tolerance=100, random_mutation_probability=0.0)
        result = iterated_chain(initial, chained, chain_probe(), DOMAIN, cfg, RngStream(5))
        # round 1 cost 2001 - 100 > 100, so round 2 never runs
        assert len(initial.calls) == 2
        assert [cost for _, cost in result.history] == [100.0, 2001.0]
        assert result.best_cost == 100.0

    def test_tolerance_100_degenerates_to_mean_plus_100(self):
        cfg = ChainConfig(rounds=3, tolerance=100, random_mutation_probability=0.0)
        at_bound = iterated_chain(
            ScriptedAlgo([(100.0, [1] * 4), (200.0, [1] * 4), (0.0, [1] * 4)]),
            ScriptedAlgo([(150.0, [2] * 4), (250.0, [2] * 4), (0.0, [2] * 4)]),
            chain_probe(), DOMAIN, cfg, RngStream(6),
        )
        assert len(at_bound.history) == 3  # 200 - 100 = 100, not > 100: no stop
        over_bound = iterated_chain(
            ScriptedAlgo([(100.0, [1] * 4), (201.0, [1] * 4), (0.0, [1] * 4)]),
            ScriptedAlgo([(150.0, [2] * 4), (251.0, [2] * 4), (0.0, [2] * 4)]),
            chain_probe(), DOMAIN, cfg, RngStream(6),
        )
        assert len(over_bound.history) == 2  # 201 - 100 = 101 > 100: stopped

    def test_best_tracks_minimum_global_cost(self):
        initial = ScriptedAlgo([(80.0, [1] * 4), (70.0, [4] * 4)])
        chained = ScriptedAlgo([(90.0, [2] * 4), (75.0, [5] * 4)])
        cfg = ChainConfig(rounds=2, tolerance=100, random_mutation_probability=0.0)
        result = iterated_chain(initial, chained, chain_probe(), DOMAIN, cfg, RngStream(7))
        assert result.best_cost == 70.0
        assert result.best == [4] * 4
        assert min(cost for _, cost in result.history) == result.best_cost

    def test_rejecting_handle_propagates(self):
        def refuses_init(probe, domain, rng, init=None):
            if init is not None:
                raise ConfigError("handle does not accept weights")
            probe.evaluate([0, 0, 0, 0])
            return RunResult([0, 0, 0, 0], 0.0, [(0, 0.0)], 1, 0.0)

        cfg = ChainConfig(rounds=2, random_mutation_probability=0.0)
        with pytest.raises(ConfigError):
            iterated_chain(refuses_init, refuses_init, chain_probe(), DOMAIN, cfg, RngStream(8))

    def test_nfe_aggregates_real_constituents(self):
        probe = chain_probe()
        local = LocalSearchConfig(max_iter=40)

        def rs(probe, domain, rng, init=None):
            return random_search(probe, domain, local, rng, init)

        def hc(probe, domain, rng, init=None):
            return hill_climbing(probe, domain, local, rng, init)

        cfg = ChainConfig(rounds=3, tolerance=100)
        result = iterated_chain(rs, hc, probe, DOMAIN, cfg, RngStream(9))
        # mutations between hand-offs cost nothing: the chain's count is
        # exactly what the probe saw
        assert result.nfe == probe.eval_count

    def test_ga_ga_chain_plateaus_on_easy_problem(self):
        # Two chained GAs re-converge to the same optimum every round: the
        # score history is flat from round 1 onward.
        domain = Domain.uniform(-10, 10, 2)
        probe = ObjectiveProbe(sphere, domain=domain)
        cfg_ga = GaConfig(pop_size=20, generations=30)

        def run_ga(probe, domain, rng, init=None):
            return ga(probe, domain, cfg_ga, rng, init)

        cfg = ChainConfig(rounds=4, tolerance=100, random_mutation_probability=0.0)
        result = iterated_chain(run_ga, run_ga, probe, domain, cfg, RngStream(10))
        scores = [cost for _, cost in result.history]
        assert len(scores) == 4
        assert len(set(scores[1:])) == 1
