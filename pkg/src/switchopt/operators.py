"""Genetic operators shared by the GA variants and the chaining meta-algorithm.

Both operators are pure: they return new solutions and never modify their
inputs, and they preserve domain bounds for every input and seed.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import ConfigError, Domain, RngStream, Solution

__all__ = ["OperatorConfig", "DEFAULT_OPERATORS", "one_point_mutation", "single_point_crossover"]


@dataclass(frozen=True)
class OperatorConfig:
    """Knobs for the mutation operator.

    mutation_step is the magnitude of a single-position perturbation;
    down_probability is the chance the perturbation prefers the downward
    direction before boundary redirection.
    """

    mutation_step: int = 1
    down_probability: float = 0.5

    def __post_init__(self):
        if self.mutation_step < 1:
            raise ConfigError(f"mutation_step must be >= 1, got {self.mutation_step}")
        if not (0.0 <= self.down_probability <= 1.0):
            raise ConfigError(
                f"down_probability must be in [0, 1], got {self.down_probability}"
            )


DEFAULT_OPERATORS = OperatorConfig()


def one_point_mutation(
    genes: Solution,
    domain: Domain,
    rng: RngStream,
    cfg: OperatorConfig = DEFAULT_OPERATORS,
) -> Solution:
    """Perturb exactly one uniformly chosen position by +/- mutation_step.

    The move is clamped by redirection: if the preferred direction would exit
    the bounds, the opposite direction is used instead; if both directions
    exit (degenerate bound), the gene is left unchanged.  Consumes exactly two
    draws from `rng`: the position, then the direction.
    """
    i = rng.randint(0, len(genes) - 1)
    down = rng.random() < cfg.down_probability
    lo, hi = domain.bounds[i]
    step = cfg.mutation_step
    out = list(genes)
    value = out[i] - step if down else out[i] + step
    if value < lo or value > hi:
        value = out[i] + step if down else out[i] - step
        if value < lo or value > hi:
            return out
    out[i] = value
    return out


def single_point_crossover(a: Solution, b: Solution, rng: RngStream) -> Solution:
    """Child a[0:k] ++ b[k:] for a split point k drawn uniformly from 1..L-1.

    Both parents always contribute at least one gene, so the split is only
    feasible for solutions of length two or more.
    """
    if len(a) != len(b):
        raise ConfigError(f"parent lengths differ: {len(a)} vs {len(b)}")
    if len(a) < 2:
        raise ConfigError("crossover infeasible: parents must have length >= 2")
    k = rng.randint(1, len(a) - 1)
    return a[:k] + b[k:]
