"""Iterated chaining: alternate two optimizers, transferring each one's best
solution ("weights") to the other, with mutation between hand-offs and a
randomized early-stopping rule on the per-round global cost.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from .core import ConfigError, Domain, ObjectiveProbe, RngStream, RunResult, Solution
from .operators import DEFAULT_OPERATORS, OperatorConfig, one_point_mutation

__all__ = ["AlgorithmHandle", "ChainConfig", "ChainState", "should_stop", "iterated_chain"]

# Anything runnable by the chain: (probe, domain, rng, init) -> RunResult,
# where init is an optional starting solution.
AlgorithmHandle = Callable[[ObjectiveProbe, Domain, RngStream, Optional[Solution]], RunResult]


@dataclass(frozen=True)
class ChainConfig:
    rounds: int = 1
    tolerance: int = 90
    n_obs: int = 2
    random_mutation_probability: float = 0.5

    def __post_init__(self):
        if self.rounds < 1:
            raise ConfigError(f"rounds must be >= 1, got {self.rounds}")
        if not (0 <= self.tolerance <= 100):
            raise ConfigError(f"tolerance must be in [0, 100], got {self.tolerance}")
        if self.n_obs < 1:
            raise ConfigError(f"n_obs must be >= 1, got {self.n_obs}")
        if not (0.0 <= self.random_mutation_probability <= 1.0):
            raise ConfigError(
                "random_mutation_probability must be in [0, 1], "
                f"got {self.random_mutation_probability}"
            )


@dataclass
class ChainState:
    """Bookkeeping carried across rounds of a chain."""

    weights: Solution | None = None
    scores: list[float] = field(default_factory=list)
    best: Solution | None = None
    best_cost: float = math.inf


def should_stop(cost: float, scores: list[float], cfg: ChainConfig, rng: RngStream) -> bool:
    """Randomized divergence test for early stopping.

    Draws R uniformly from the integers [tolerance, 100] and reports True iff
    cost - R exceeds the mean of the most recent n_obs recorded scores (all
    available scores when fewer than n_obs exist).  With tolerance = 100 the
    rule degenerates to cost > mean + 100.
    """
    if not scores:
        raise ConfigError("should_stop requires at least one recorded score")
    n = min(cfg.n_obs, len(scores))
    recent_mean = sum(scores[-n:]) / n
    slack = rng.randint(cfg.tolerance, 100)
    return cost - slack > recent_mean


def iterated_chain(
    initial: AlgorithmHandle,
    chained: AlgorithmHandle,
    probe: ObjectiveProbe,
    domain: Domain,
    cfg: ChainConfig,
    rng: RngStream,
    operators: OperatorConfig = DEFAULT_OPERATORS,
) -> RunResult:
    """Run the two-algorithm chain for up to cfg.rounds rounds.

    Per round: run `initial` seeded with the current weights (round 0 starts
    unseeded), mutate its output with probability
    cfg.random_mutation_probability, run `chained` seeded with the result,
    then mutate that output unconditionally except on the final round, whose
    solution is handed back untouched.  The round's global cost is the minimum
    true cost either constituent observed; from round 1 onward the chain stops
    early when should_stop flags the global cost as diverging.

    The returned history holds one (round, global cost) entry per executed
    round, and nfe aggregates the constituents' evaluations (mutations are
    free).
    """
    t_start = time.perf_counter()
    start_evals = probe.eval_count
    state = ChainState()

    for round_index in range(cfg.rounds):
        result_initial = initial(probe, domain, rng, state.weights)
        handoff = result_initial.best
        if rng.random() < cfg.random_mutation_probability:
            handoff = one_point_mutation(handoff, domain, rng, operators)
        result_chained = chained(probe, domain, rng, handoff)

        for result in (result_initial, result_chained):
            if result.best_cost < state.best_cost:
                state.best = list(result.best)
                state.best_cost = result.best_cost
        global_cost = min(result_initial.best_cost, result_chained.best_cost)

        outgoing = result_chained.best
        if round_index < cfg.rounds - 1:
            outgoing = one_point_mutation(outgoing, domain, rng, operators)
        stop = round_index >= 1 and should_stop(global_cost, state.scores, cfg, rng)
        state.scores.append(global_cost)
        state.weights = outgoing
        if stop:
            break

    history = list(enumerate(state.scores))
    wall_ms = (time.perf_counter() - t_start) * 1000.0
    return RunResult(state.best, state.best_cost, history, probe.eval_count - start_evals, wall_ms)
