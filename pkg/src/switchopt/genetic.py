"""Elitist genetic algorithm and its objective-reversal switching variants.

Four entry points share one engine:

* ``ga`` -- rank, keep the elite fraction, refill with mutation (probability
  p_mutation) or crossover of two random elites.  With ``reverse_ops`` the
  two operator roles swap, so p_mutation becomes the crossover probability.
* ``ga_with_reversals`` -- periodically flips the probe sign and runs
  step_length generations of the same update driving the cost upward, which
  kicks the population out of local minima before minimization resumes.
* ``ga_with_stochastic_reversals`` -- the reversal window instead runs a
  random search on the negated objective and injects the worst solution it
  finds into a non-elite population slot.

Best-ever tracking and the reported history are always in true minimization
terms, including inside reversal windows.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from enum import Enum

from .core import (
    ConfigError,
    Domain,
    ObjectiveProbe,
    RngStream,
    RunResult,
    Sign,
    Solution,
    random_solution,
)
from .local_search import LocalSearchConfig, random_search
from .operators import one_point_mutation, single_point_crossover

__all__ = [
    "GaConfig",
    "ReversalMode",
    "ReversalConfig",
    "compute_num_reversals",
    "ga",
    "ga_with_reversals",
    "ga_with_stochastic_reversals",
]


@dataclass(frozen=True)
class GaConfig:
    pop_size: int = 100
    generations: int = 500
    elite_rate: float = 0.2
    p_mutation: float = 0.2
    reverse_ops: bool = False

    def __post_init__(self):
        if self.pop_size < 1:
            raise ConfigError(f"pop_size must be >= 1, got {self.pop_size}")
        if self.generations < 1:
            raise ConfigError(f"generations must be >= 1, got {self.generations}")
        if not (0.0 < self.elite_rate <= 1.0):
            raise ConfigError(f"elite_rate must be in (0, 1], got {self.elite_rate}")
        if not (0.0 <= self.p_mutation <= 1.0):
            raise ConfigError(f"p_mutation must be in [0, 1], got {self.p_mutation}")
        if self.elite_count < 2:
            raise ConfigError(
                f"floor(pop_size * elite_rate) = {self.elite_count} < 2; "
                "crossover needs two parents"
            )

    @property
    def elite_count(self) -> int:
        return int(self.pop_size * self.elite_rate)


class ReversalMode(Enum):
    GA_REVERSAL = "ga-reversal"
    STOCHASTIC_REVERSAL = "stochastic-reversal"


@dataclass(frozen=True)
class ReversalConfig:
    """Schedule of reversal windows.

    A window opens at every generation i > 0 divisible by n_k, up to
    num_reversals = floor(generations / n_k) windows per run, and lasts
    step_length generations (or step_length random-search evaluations in
    stochastic mode).  ``n_k=None`` resolves to floor(generations / 2) at run
    time, the preset under which exactly one window fires; note that a window
    can only fire when n_k <= generations - 1, since the loop index never
    reaches `generations` itself.
    """

    n_k: int | None = None
    step_length: int = 100
    mode: ReversalMode = ReversalMode.GA_REVERSAL

    def __post_init__(self):
        if self.n_k is not None and self.n_k < 1:
            raise ConfigError(f"n_k must be >= 1, got {self.n_k}")
        if self.step_length < 1:
            raise ConfigError(f"step_length must be >= 1, got {self.step_length}")

    def resolve_n_k(self, generations: int) -> int:
        n_k = self.n_k if self.n_k is not None else max(1, generations // 2)
        if not (1 <= n_k <= generations):
            raise ConfigError(f"n_k must satisfy 1 <= n_k <= generations, got {n_k}")
        return n_k


def compute_num_reversals(generations: int, n_k: int) -> int:
    """Number of reversal windows allowed per run: floor(generations / n_k)."""
    if generations < 1:
        raise ConfigError(f"generations must be >= 1, got {generations}")
    if not (1 <= n_k <= generations):
        raise ConfigError(f"n_k must satisfy 1 <= n_k <= generations, got {n_k}")
    return generations // n_k


def ga(
    probe: ObjectiveProbe,
    domain: Domain,
    cfg: GaConfig,
    rng: RngStream,
    init: Solution | None = None,
) -> RunResult:
    """Standard elitist GA (or the reverse-operations variant via cfg.reverse_ops)."""
    return _run_ga(probe, domain, cfg, rng, init, rcfg=None)


def ga_with_reversals(
    probe: ObjectiveProbe,
    domain: Domain,
    cfg: GaConfig,
    rcfg: ReversalConfig,
    rng: RngStream,
    init: Solution | None = None,
) -> RunResult:
    """GA whose reversal windows run step_length generations on the negated objective.

    Window generations do not advance the outer schedule index, so the total
    number of minimizing generations is unchanged by reversals; they do append
    to the history and the evaluation count.
    """
    if probe.sign is not Sign.MINIMIZE:
        raise ConfigError("reversal variants require a probe starting in MINIMIZE mode")
    return _run_ga(probe, domain, cfg, rng, init, rcfg=rcfg)


def ga_with_stochastic_reversals(
    probe: ObjectiveProbe,
    domain: Domain,
    cfg: GaConfig,
    rcfg: ReversalConfig,
    rng: RngStream,
    init: Solution | None = None,
) -> RunResult:
    """GA whose reversal windows run a cost-worsening random search.

    The window starts a random search from the current best on the reversed
    probe (step_length candidates plus the evaluated start), then replaces a
    uniformly chosen non-elite population member with the worst solution found
    before minimization resumes.
    """
    if rcfg.mode is not ReversalMode.STOCHASTIC_REVERSAL:
        raise ConfigError("ga_with_stochastic_reversals requires mode=STOCHASTIC_REVERSAL")
    if probe.sign is not Sign.MINIMIZE:
        raise ConfigError("reversal variants require a probe starting in MINIMIZE mode")
    if cfg.elite_count >= cfg.pop_size:
        raise ConfigError("stochastic reversals need at least one non-elite member")
    return _run_ga(probe, domain, cfg, rng, init, rcfg=rcfg)


def _run_ga(
    probe: ObjectiveProbe,
    domain: Domain,
    cfg: GaConfig,
    rng: RngStream,
    init: Solution | None,
    rcfg: ReversalConfig | None,
) -> RunResult:
    if domain.length < 2:
        raise ConfigError("GA crossover needs solutions of length >= 2")
    t_start = time.perf_counter()
    start_evals = probe.eval_count
    evaluate = probe.evaluate

    pop_size = cfg.pop_size
    elite_count = cfg.elite_count
    p_mutation = cfg.p_mutation
    reverse_ops = cfg.reverse_ops
    rand = rng.random
    randint = rng.randint

    pop = [random_solution(domain, rng) for _ in range(pop_size)]
    if init is not None:
        domain.check(init)
        pop[randint(0, pop_size - 1)] = list(init)

    history: list[tuple[int, float]] = []
    best: Solution | None = None
    best_cost = math.inf
    tick = 0

    def rank(reversed_phase: bool) -> list[Solution]:
        """Evaluate the population, record history, return it sorted by probe cost."""
        nonlocal best, best_cost, tick
        costs = [evaluate(ind) for ind in pop]
        order = sorted(range(pop_size), key=costs.__getitem__)
        # True (minimizing) cost of the fittest-by-true-cost individual; under
        # a reversed probe that is the individual ranked last.
        lead = order[-1] if reversed_phase else order[0]
        true_best = -costs[lead] if reversed_phase else costs[lead]
        if true_best < best_cost:
            best_cost = true_best
            best = list(pop[lead])
        history.append((tick, true_best))
        tick += 1
        return [pop[j] for j in order]

    def generation(reversed_phase: bool) -> None:
        nonlocal pop
        ranked = rank(reversed_phase)
        elites = ranked[:elite_count]
        children: list[Solution] = []
        for _ in range(pop_size - elite_count):
            mutate_branch = (rand() < p_mutation) != reverse_ops
            if mutate_branch:
                parent = elites[randint(0, elite_count - 1)]
                children.append(one_point_mutation(parent, domain, rng))
            else:
                pa = elites[randint(0, elite_count - 1)]
                pb = elites[randint(0, elite_count - 1)]
                children.append(single_point_crossover(pa, pb, rng))
        pop = elites + children

    if rcfg is None:
        for _ in range(cfg.generations):
            generation(False)
    else:
        n_k = rcfg.resolve_n_k(cfg.generations)
        num_reversals = compute_num_reversals(cfg.generations, n_k)
        stochastic = rcfg.mode is ReversalMode.STOCHASTIC_REVERSAL
        fired = 0
        for i in range(cfg.generations):
            if i != 0 and i % n_k == 0 and fired < num_reversals:
                probe.sign = Sign.MAXIMIZE_REVERSED
                try:
                    if stochastic:
                        worst = random_search(
                            probe,
                            domain,
                            LocalSearchConfig(max_iter=rcfg.step_length),
                            rng,
                            init=best,
                        )
                        # Minimizing the reversed probe maximizes the true cost.
                        pop[randint(elite_count, pop_size - 1)] = worst.best
                    else:
                        for _ in range(rcfg.step_length):
                            generation(True)
                finally:
                    probe.sign = Sign.MINIMIZE
                fired += 1
            generation(False)
    # Final ranking so the last generation's offspring count toward the result.
    rank(False)

    wall_ms = (time.perf_counter() - t_start) * 1000.0
    return RunResult(best, best_cost, history, probe.eval_count - start_evals, wall_ms)
