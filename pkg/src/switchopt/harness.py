"""Multi-seed experiment runner and result emitters.

A batch executes `runs` independent seeded runs of one algorithm on one
problem, each run on its own child stream derived from the master seed, and
aggregates the costs into a summary.  Results are identical for any worker
count because nothing is shared between runs: each worker rebuilds the
problem, probe, and stream from the experiment spec and its run index.
"""

from __future__ import annotations

import json
import os
import statistics
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from typing import Callable

from .benchmarks import by_name
from .chaining import AlgorithmHandle, ChainConfig, iterated_chain
from .core import (
    ConfigError,
    Domain,
    ObjectiveProbe,
    RngStream,
    RunResult,
    Solution,
)
from .flight import FlightTable, flight_domain, load_flight_table, schedule_cost
from .genetic import (
    GaConfig,
    ReversalConfig,
    ReversalMode,
    ga,
    ga_with_reversals,
    ga_with_stochastic_reversals,
)
from .local_search import LocalSearchConfig, SaConfig, hill_climbing, random_search, simulated_annealing

__all__ = [
    "ALGORITHMS",
    "CONSTITUENT_ALGORITHMS",
    "ExperimentSpec",
    "StatsSummary",
    "run_single",
    "run_batch",
    "summarize",
    "emit_table",
    "emit_history",
]

PARALLELISM_ENV_VAR = "SWITCHOPT_THREADS"

CONSTITUENT_ALGORITHMS = (
    "rs",
    "hc",
    "sa",
    "ga",
    "ga-reverse-ops",
    "ga-reversals",
    "ga-stochastic-reversals",
)
ALGORITHMS = CONSTITUENT_ALGORITHMS + ("ic",)


@dataclass(frozen=True)
class ExperimentSpec:
    """Everything needed to reproduce a batch: problem, algorithm, configs, seeds."""

    problem: str  # benchmark name, or "flight"
    algorithm: str
    runs: int = 20
    master_seed: int = 0
    parallelism: int = 1
    ga: GaConfig = field(default_factory=GaConfig)
    reversal: ReversalConfig = field(default_factory=ReversalConfig)
    sa: SaConfig = field(default_factory=SaConfig)
    local: LocalSearchConfig = field(default_factory=LocalSearchConfig)
    chain: ChainConfig = field(default_factory=ChainConfig)
    initial: str | None = None  # constituents for algorithm="ic"
    chained: str | None = None
    schedule_path: str | None = None
    problem_config_path: str | None = None
    flight_table: FlightTable | None = None
    min_flights_per_leg: int = 10

    def __post_init__(self):
        if self.runs < 1:
            raise ConfigError(f"runs must be >= 1, got {self.runs}")
        if self.parallelism < 1:
            raise ConfigError(f"parallelism must be >= 1, got {self.parallelism}")
        if self.algorithm not in ALGORITHMS:
            raise ConfigError(
                f"unknown algorithm {self.algorithm!r}; known: {', '.join(ALGORITHMS)}"
            )


@dataclass(frozen=True)
class StatsSummary:
    """One batch's descriptive statistics (population sigma)."""

    mean_cost: float
    std_cost: float
    min_cost: float
    max_cost: float
    mean_nfe: float
    mean_wall_ms: float


def _resolve_problem(spec: ExperimentSpec) -> tuple[Callable[[Solution], float], Domain]:
    if spec.problem == "flight":
        table = spec.flight_table
        if table is None:
            if spec.schedule_path is None or spec.problem_config_path is None:
                raise ConfigError(
                    "flight experiments need schedule_path and problem_config_path "
                    "(or an in-memory flight_table)"
                )
            table = load_flight_table(
                spec.schedule_path, spec.problem_config_path, spec.min_flights_per_leg
            )
        return _FlightCost(table), flight_domain(table)
    bench = by_name(spec.problem)
    return bench.formula, bench.domain


class _FlightCost:
    """Picklable schedule_cost closure over a parsed table."""

    __slots__ = ("table",)

    def __init__(self, table: FlightTable):
        self.table = table

    def __call__(self, genes: Solution) -> float:
        return schedule_cost(self.table, genes)


def _constituent_handle(name: str, spec: ExperimentSpec) -> AlgorithmHandle:
    if name == "rs":
        cfg = spec.local
        return lambda probe, domain, rng, init=None: random_search(probe, domain, cfg, rng, init)
    if name == "hc":
        cfg = spec.local
        return lambda probe, domain, rng, init=None: hill_climbing(probe, domain, cfg, rng, init)
    if name == "sa":
        cfg = spec.sa
        return lambda probe, domain, rng, init=None: simulated_annealing(probe, domain, cfg, rng, init)
    if name == "ga":
        cfg = replace(spec.ga, reverse_ops=False)
        return lambda probe, domain, rng, init=None: ga(probe, domain, cfg, rng, init)
    if name == "ga-reverse-ops":
        cfg = replace(spec.ga, reverse_ops=True)
        return lambda probe, domain, rng, init=None: ga(probe, domain, cfg, rng, init)
    if name == "ga-reversals":
        cfg = replace(spec.ga, reverse_ops=False)
        rcfg = replace(spec.reversal, mode=ReversalMode.GA_REVERSAL)
        return lambda probe, domain, rng, init=None: ga_with_reversals(
            probe, domain, cfg, rcfg, rng, init
        )
    if name == "ga-stochastic-reversals":
        cfg = replace(spec.ga, reverse_ops=False)
        rcfg = replace(spec.reversal, mode=ReversalMode.STOCHASTIC_REVERSAL)
        return lambda probe, domain, rng, init=None: ga_with_stochastic_reversals(
            probe, domain, cfg, rcfg, rng, init
        )
    raise ConfigError(f"{name!r} cannot be used as a chain constituent")


def _make_runner(spec: ExperimentSpec) -> Callable[[ObjectiveProbe, Domain, RngStream], RunResult]:
    if spec.algorithm == "ic":
        if spec.initial is None or spec.chained is None:
            raise ConfigError("algorithm 'ic' needs both an initial and a chained constituent")
        initial = _constituent_handle(spec.initial, spec)
        chained = _constituent_handle(spec.chained, spec)
        chain_cfg = spec.chain
        return lambda probe, domain, rng: iterated_chain(
            initial, chained, probe, domain, chain_cfg, rng
        )
    handle = _constituent_handle(spec.algorithm, spec)
    return lambda probe, domain, rng: handle(probe, domain, rng, None)


def run_single(spec: ExperimentSpec, run_index: int) -> RunResult:
    """Execute run `run_index` of the batch described by `spec`."""
    cost_fn, domain = _resolve_problem(spec)
    runner = _make_runner(spec)
    probe = ObjectiveProbe(cost_fn, domain=domain)
    rng = RngStream.derive(spec.master_seed, run_index)
    return runner(probe, domain, rng)


def run_batch(spec: ExperimentSpec) -> tuple[StatsSummary, list[RunResult]]:
    """Run the whole batch and aggregate its statistics.

    Parallelism comes from the spec unless the SWITCHOPT_THREADS environment
    variable overrides it; either way the per-run results are identical
    because each run depends only on (master_seed, run_index).
    """
    # Validate the problem and algorithm up front so config and I/O errors
    # surface before any worker is spawned.
    _resolve_problem(spec)
    _make_runner(spec)

    workers = _effective_parallelism(spec)
    indexes = range(spec.runs)
    if workers <= 1 or spec.runs == 1:
        results = [run_single(spec, i) for i in indexes]
    else:
        with ProcessPoolExecutor(max_workers=min(workers, spec.runs)) as pool:
            results = list(pool.map(run_single, [spec] * spec.runs, indexes))
    return summarize(results), results


def _effective_parallelism(spec: ExperimentSpec) -> int:
    raw = os.environ.get(PARALLELISM_ENV_VAR)
    if raw is None:
        return spec.parallelism
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{PARALLELISM_ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ConfigError(f"{PARALLELISM_ENV_VAR} must be >= 1, got {value}")
    return value


def summarize(results: list[RunResult]) -> StatsSummary:
    if not results:
        raise ConfigError("cannot summarize an empty result list")
    costs = [r.best_cost for r in results]
    return StatsSummary(
        mean_cost=statistics.fmean(costs),
        std_cost=statistics.pstdev(costs),
        min_cost=min(costs),
        max_cost=max(costs),
        mean_nfe=statistics.fmean(r.nfe for r in results),
        mean_wall_ms=statistics.fmean(r.wall_ms for r in results),
    )


_TABLE_ROWS = (
    ("mean_cost", "mean_cost"),
    ("std_cost", "std_cost"),
    ("min_cost", "min_cost"),
    ("max_cost", "max_cost"),
    ("mean_nfe", "mean_nfe"),
    ("mean_runtime_ms", "mean_wall_ms"),
)


def emit_table(
    summaries: list[tuple[str, StatsSummary]],
    format: str = "csv",
    include_runtime: bool = True,
) -> str:
    """Render labeled summaries as a table, one column per algorithm label.

    CSV values are formatted with two decimal places; JSON keeps full float
    precision and round-trips exactly.  `include_runtime=False` drops the
    wall-clock row, the one field exempt from determinism, which is what the
    reproducibility checks compare.
    """
    if not summaries:
        raise ConfigError("emit_table needs at least one (label, summary) pair")
    rows = _TABLE_ROWS if include_runtime else _TABLE_ROWS[:-1]
    if format == "csv":
        lines = ["metric," + ",".join(label for label, _ in summaries)]
        for row_name, attr in rows:
            values = ",".join(f"{getattr(s, attr):.2f}" for _, s in summaries)
            lines.append(f"{row_name},{values}")
        return "\n".join(lines) + "\n"
    if format == "json":
        payload = [
            {"label": label, **{row: getattr(s, attr) for row, attr in rows}}
            for label, s in summaries
        ]
        return json.dumps(payload, indent=2) + "\n"
    raise ConfigError(f"unknown table format {format!r}; use 'csv' or 'json'")


def emit_history(result: RunResult) -> str:
    """Two-column CSV (iteration, cost) of a run's score history."""
    if not result.history:
        raise ConfigError("run has an empty history")
    lines = ["iteration,cost"]
    lines.extend(f"{i},{cost!r}" for i, cost in result.history)
    return "\n".join(lines) + "\n"
