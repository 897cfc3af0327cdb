"""Deterministic foundations shared by every optimizer in the package.

Everything downstream builds on four pieces: an explicit, seedable PRNG
(`RngStream`), an integer box search space (`Domain`), an evaluation-counting
objective wrapper (`ObjectiveProbe`), and the per-run result record
(`RunResult`).  Given the same seed, configuration, and objective, every
algorithm in this package produces bit-identical solutions, costs, histories,
and evaluation counts; only wall-clock time is exempt.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

__all__ = [
    "SwitchoptError",
    "ConfigError",
    "DimensionalityError",
    "Solution",
    "RngStream",
    "derive_seed",
    "Domain",
    "Sign",
    "ObjectiveProbe",
    "RunResult",
    "random_solution",
]


class SwitchoptError(Exception):
    """Base class for all errors raised by this package."""


class ConfigError(SwitchoptError):
    """A configuration or usage invariant was violated."""


class DimensionalityError(ConfigError):
    """A solution's length does not match the governing domain."""


# A solution is a plain list of integer genes.  Operators never mutate their
# inputs; they return fresh lists.
Solution = list[int]

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX_A = 0xBF58476D1CE4E5B9
_MIX_B = 0x94D049BB133111EB
# Odd multiplier used to spread run indexes before mixing; any two distinct
# indexes below 2**64 yield distinct child seeds.
_STREAM_STRIDE = 0xD1342543DE82EF95

_INV_2_53 = 2.0 ** -53


def _mix64(z: int) -> int:
    """splitmix64 finalizer: a bijective avalanche on 64-bit integers."""
    z = (z + _GOLDEN) & _MASK64
    z = ((z ^ (z >> 30)) * _MIX_A) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX_B) & _MASK64
    return z ^ (z >> 31)


def derive_seed(parent_seed: int, run_index: int) -> int:
    """Derive the child seed for run `run_index` of a batch.

    The derivation is a pure function of (parent_seed, run_index), so a batch
    produces the same per-run streams no matter how runs are scheduled.
    Distinct run indexes always map to distinct child seeds.
    """
    if run_index < 0:
        raise ConfigError(f"run_index must be >= 0, got {run_index}")
    base = _mix64(parent_seed & _MASK64)
    return _mix64(base ^ ((run_index * _STREAM_STRIDE) & _MASK64))


class RngStream:
    """splitmix64 pseudo-random stream.

    The generator is deliberately small and fully specified here rather than
    delegated to the platform's RNG: state advances by the 64-bit golden-ratio
    constant and each output is the splitmix64 finalizer of the state.  This
    keeps draws bit-exact across runs, machines, and language versions.

    Draw primitives:
      * ``random()``  -- uniform float in [0, 1), 53 bits of precision.
      * ``randint(a, b)`` -- uniform integer in [a, b] inclusive, unbiased
        via rejection sampling.
      * ``derive(parent_seed, i)`` -- independent child stream for run i.
    """

    __slots__ = ("seed", "_state")

    def __init__(self, seed: int):
        self.seed = seed & _MASK64
        self._state = self.seed

    def _next_u64(self) -> int:
        self._state = s = (self._state + _GOLDEN) & _MASK64
        z = ((s ^ (s >> 30)) * _MIX_A) & _MASK64
        z = ((z ^ (z >> 27)) * _MIX_B) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform float in [0, 1)."""
        return (self._next_u64() >> 11) * _INV_2_53

    def randint(self, a: int, b: int) -> int:
        """Uniform integer in [a, b], both endpoints inclusive."""
        if a > b:
            raise ConfigError(f"randint bounds reversed: [{a}, {b}]")
        span = b - a + 1
        # Reject draws from the incomplete top block so every value in the
        # span is exactly equally likely.
        limit = ((1 << 64) // span) * span
        while True:
            u = self._next_u64()
            if u < limit:
                return a + (u % span)

    @classmethod
    def derive(cls, parent_seed: int, run_index: int) -> "RngStream":
        """Child stream for run `run_index` under `parent_seed`."""
        return cls(derive_seed(parent_seed, run_index))

    def __repr__(self) -> str:
        return f"RngStream(seed={self.seed:#x})"


@dataclass(frozen=True)
class Domain:
    """Per-position inclusive integer bounds defining the search space."""

    bounds: tuple[tuple[int, int], ...]

    def __init__(self, bounds: Sequence[Sequence[int]]):
        pairs = tuple((int(lo), int(hi)) for lo, hi in bounds)
        if not pairs:
            raise ConfigError("domain needs at least one (lo, hi) pair")
        for i, (lo, hi) in enumerate(pairs):
            if lo > hi:
                raise ConfigError(f"domain bound {i} has lo > hi: ({lo}, {hi})")
        object.__setattr__(self, "bounds", pairs)

    @property
    def length(self) -> int:
        return len(self.bounds)

    def check(self, genes: Sequence[int]) -> None:
        """Raise unless `genes` is a valid solution for this domain."""
        if len(genes) != len(self.bounds):
            raise DimensionalityError(
                f"solution length {len(genes)} != domain length {len(self.bounds)}"
            )
        for i, (g, (lo, hi)) in enumerate(zip(genes, self.bounds)):
            if not (lo <= g <= hi):
                raise ConfigError(f"gene {i} = {g} outside bounds ({lo}, {hi})")

    @classmethod
    def uniform(cls, lo: int, hi: int, length: int) -> "Domain":
        """Domain with the same (lo, hi) bound at every position."""
        return cls([(lo, hi)] * length)


class Sign(Enum):
    """Optimization sense of a probe.

    In MAXIMIZE_REVERSED mode the probe negates the underlying cost, so
    minimizing the probe maximizes the true cost.  Flipping the sign twice
    restores the original ordering of any pair of solutions.
    """

    MINIMIZE = "minimize"
    MAXIMIZE_REVERSED = "maximize-reversed"


class ObjectiveProbe:
    """Evaluation-counting, sign-flippable wrapper around a cost function.

    The probe is the single funnel through which algorithms see an objective:
    `eval_count` increments by exactly one per `evaluate` call, which is what
    run results report as the number of function evaluations.
    """

    __slots__ = ("target", "sign", "eval_count", "_expected_length")

    def __init__(
        self,
        target: Callable[[Solution], float],
        sign: Sign = Sign.MINIMIZE,
        domain: Domain | None = None,
    ):
        self.target = target
        self.sign = sign
        self.eval_count = 0
        self._expected_length = domain.length if domain is not None else None

    def evaluate(self, genes: Solution) -> float:
        """Sign-adjusted cost of `genes`; bumps the evaluation counter."""
        if self._expected_length is not None and len(genes) != self._expected_length:
            raise DimensionalityError(
                f"solution length {len(genes)} != expected {self._expected_length}"
            )
        self.eval_count += 1
        cost = self.target(genes)
        if self.sign is Sign.MAXIMIZE_REVERSED:
            return -cost
        return cost


@dataclass
class RunResult:
    """Outcome of one seeded run of an algorithm.

    `history` is a list of (iteration index, cost) pairs in true minimization
    terms; its minimum always equals `best_cost`.  `nfe` counts the objective
    evaluations performed during the run.  `wall_ms` is measured wall-clock
    time and is the only field exempt from the determinism contract.
    """

    best: Solution
    best_cost: float
    history: list[tuple[int, float]]
    nfe: int
    wall_ms: float


def random_solution(domain: Domain, rng: RngStream) -> Solution:
    """Draw each gene uniformly and independently from its inclusive bounds."""
    return [rng.randint(lo, hi) for lo, hi in domain.bounds]
