"""Classic gradient-free baselines: random search, hill climbing, simulated annealing.

Each algorithm accepts an optional initial solution so it can be seeded with
transferred weights by the chaining meta-algorithm, and each returns the
minimum-cost solution among everything it evaluated (best-ever, not last).
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

from .core import ConfigError, Domain, ObjectiveProbe, RngStream, RunResult, Solution, random_solution
from .operators import OperatorConfig, one_point_mutation

__all__ = [
    "LocalSearchConfig",
    "SaConfig",
    "acceptance_probability",
    "random_search",
    "hill_climbing",
    "simulated_annealing",
]


@dataclass(frozen=True)
class LocalSearchConfig:
    """Iteration cap shared by random search and hill climbing."""

    max_iter: int = 100

    def __post_init__(self):
        if self.max_iter < 1:
            raise ConfigError(f"max_iter must be >= 1, got {self.max_iter}")


@dataclass(frozen=True)
class SaConfig:
    """Simulated annealing schedule: geometric cooling from t0 down to t_stop."""

    t0: float = 50000.0
    cooling: float = 0.95
    t_stop: float = 0.1
    step: int = 1

    def __post_init__(self):
        if not (self.t0 > self.t_stop > 0.0):
            raise ConfigError(f"need t0 > t_stop > 0, got t0={self.t0}, t_stop={self.t_stop}")
        if not (0.0 < self.cooling < 1.0):
            raise ConfigError(f"cooling must be in (0, 1), got {self.cooling}")
        if self.step < 1:
            raise ConfigError(f"step must be >= 1, got {self.step}")


def acceptance_probability(current_cost: float, candidate_cost: float, temperature: float) -> float:
    """Metropolis acceptance probability for a move from current to candidate.

    Improving or equal moves have probability >= 1; worsening moves decay
    exponentially with the cost gap over the temperature.  As the temperature
    grows without bound the probability of any candidate tends to 1.
    """
    return math.exp((current_cost - candidate_cost) / temperature)


def random_search(
    probe: ObjectiveProbe,
    domain: Domain,
    cfg: LocalSearchConfig,
    rng: RngStream,
    init: Solution | None = None,
) -> RunResult:
    """Evaluate max_iter uniformly random solutions and keep the best seen.

    If `init` is given it is evaluated first and seeds the incumbent, adding
    one evaluation on top of the max_iter random candidates.
    """
    t_start = time.perf_counter()
    start_evals = probe.eval_count
    evaluate = probe.evaluate

    history: list[tuple[int, float]] = []
    best: Solution | None = None
    best_cost = math.inf
    tick = 0
    if init is not None:
        domain.check(init)
        best = list(init)
        best_cost = evaluate(best)
        history.append((tick, best_cost))
        tick += 1
    for _ in range(cfg.max_iter):
        cand = random_solution(domain, rng)
        cost = evaluate(cand)
        history.append((tick, cost))
        tick += 1
        if cost < best_cost:
            best, best_cost = cand, cost
    wall_ms = (time.perf_counter() - t_start) * 1000.0
    return RunResult(best, best_cost, history, probe.eval_count - start_evals, wall_ms)


def hill_climbing(
    probe: ObjectiveProbe,
    domain: Domain,
    cfg: LocalSearchConfig,
    rng: RngStream,
    init: Solution | None = None,
) -> RunResult:
    """Steepest-descent hill climbing over the +/-1 neighborhood.

    Each iteration evaluates every in-bounds single-coordinate +/-1 move (up
    to 2L neighbors) and jumps to the strictly best improving one.  The search
    stops at the first iteration with no strict improvement, or after max_iter
    iterations.  Neighbor ties break toward the lowest (dimension, down-first)
    pair, so the trajectory is fully determined by the starting point.
    """
    t_start = time.perf_counter()
    start_evals = probe.eval_count
    evaluate = probe.evaluate

    if init is not None:
        domain.check(init)
        current = list(init)
    else:
        current = random_solution(domain, rng)
    current_cost = evaluate(current)
    history: list[tuple[int, float]] = [(0, current_cost)]

    for it in range(1, cfg.max_iter + 1):
        best_move: Solution | None = None
        best_move_cost = current_cost
        for i, (lo, hi) in enumerate(domain.bounds):
            for delta in (-1, 1):
                value = current[i] + delta
                if value < lo or value > hi:
                    continue
                neighbor = list(current)
                neighbor[i] = value
                cost = evaluate(neighbor)
                if cost < best_move_cost:
                    best_move, best_move_cost = neighbor, cost
        if best_move is None:
            break
        current, current_cost = best_move, best_move_cost
        history.append((it, current_cost))

    wall_ms = (time.perf_counter() - t_start) * 1000.0
    return RunResult(current, current_cost, history, probe.eval_count - start_evals, wall_ms)


def simulated_annealing(
    probe: ObjectiveProbe,
    domain: Domain,
    cfg: SaConfig,
    rng: RngStream,
    init: Solution | None = None,
) -> RunResult:
    """Metropolis annealing on random single-coordinate +/-step moves.

    Per iteration the current solution and one perturbed candidate are both
    evaluated (two evaluations per iteration), the candidate is accepted if it
    is better and otherwise with probability exp((current - candidate) / T),
    and the temperature is multiplied by the cooling rate.  The loop runs
    while T > t_stop, so the iteration count is a pure function of
    (t0, cooling, t_stop).  Returns the best solution ever evaluated.
    """
    t_start = time.perf_counter()
    start_evals = probe.eval_count
    evaluate = probe.evaluate
    move_cfg = OperatorConfig(mutation_step=cfg.step)

    if init is not None:
        domain.check(init)
        current = list(init)
    else:
        current = random_solution(domain, rng)

    best: Solution | None = None
    best_cost = math.inf
    history: list[tuple[int, float]] = []
    tick = 0
    temperature = cfg.t0
    while temperature > cfg.t_stop:
        current_cost = evaluate(current)
        if tick == 0:
            history.append((0, current_cost))
        candidate = one_point_mutation(current, domain, rng, move_cfg)
        candidate_cost = evaluate(candidate)
        if current_cost < best_cost:
            best, best_cost = current, current_cost
        if candidate_cost < best_cost:
            best, best_cost = candidate, candidate_cost
        if candidate_cost < current_cost:
            current = candidate
        elif rng.random() < acceptance_probability(current_cost, candidate_cost, temperature):
            current = candidate
        history.append((tick + 1, candidate_cost if current is candidate else current_cost))
        tick += 1
        temperature *= cfg.cooling

    wall_ms = (time.perf_counter() - t_start) * 1000.0
    return RunResult(best, best_cost, history, probe.eval_count - start_evals, wall_ms)
