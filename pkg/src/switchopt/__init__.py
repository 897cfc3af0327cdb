"""Deterministic, seedable gradient-free optimizers for integer box domains.

The package bundles three classic baselines (random search, hill climbing,
simulated annealing), an elitist genetic algorithm with three switching
variants built on temporarily reversing the optimization sense, an iterated
chaining meta-algorithm that alternates two optimizers with solution
hand-offs, a flight-scheduling objective, a benchmark-function catalog, and a
multi-seed experiment harness with a CLI.
"""

from .benchmarks import BenchmarkSpec, by_name, catalog, evaluate_benchmark
from .chaining import AlgorithmHandle, ChainConfig, ChainState, iterated_chain, should_stop
from .core import (
    ConfigError,
    DimensionalityError,
    Domain,
    ObjectiveProbe,
    RngStream,
    RunResult,
    Sign,
    Solution,
    SwitchoptError,
    derive_seed,
    random_solution,
)
from .flight import (
    Flight,
    FlightProblemConfig,
    FlightTable,
    Itinerary,
    PersonTrip,
    ScheduleError,
    decode_itinerary,
    encode_itinerary,
    flight_domain,
    get_minutes,
    load_flight_table,
    load_problem_config,
    parse_schedule,
    schedule_cost,
)
from .genetic import (
    GaConfig,
    ReversalConfig,
    ReversalMode,
    compute_num_reversals,
    ga,
    ga_with_reversals,
    ga_with_stochastic_reversals,
)
from .harness import (
    ALGORITHMS,
    ExperimentSpec,
    StatsSummary,
    emit_history,
    emit_table,
    run_batch,
    run_single,
    summarize,
)
from .local_search import (
    LocalSearchConfig,
    SaConfig,
    acceptance_probability,
    hill_climbing,
    random_search,
    simulated_annealing,
)
from .operators import OperatorConfig, one_point_mutation, single_point_crossover

__version__ = "0.1.0"

__all__ = [
    "ALGORITHMS",
    "AlgorithmHandle",
    "BenchmarkSpec",
    "ChainConfig",
    "ChainState",
    "ConfigError",
    "DimensionalityError",
    "Domain",
    "ExperimentSpec",
    "Flight",
    "FlightProblemConfig",
    "FlightTable",
    "GaConfig",
    "Itinerary",
    "LocalSearchConfig",
    "ObjectiveProbe",
    "OperatorConfig",
    "PersonTrip",
    "ReversalConfig",
    "ReversalMode",
    "RngStream",
    "RunResult",
    "SaConfig",
    "ScheduleError",
    "Sign",
    "Solution",
    "StatsSummary",
    "SwitchoptError",
    "acceptance_probability",
    "by_name",
    "catalog",
    "compute_num_reversals",
    "decode_itinerary",
    "derive_seed",
    "emit_history",
    "emit_table",
    "encode_itinerary",
    "evaluate_benchmark",
    "flight_domain",
    "ga",
    "ga_with_reversals",
    "ga_with_stochastic_reversals",
    "get_minutes",
    "hill_climbing",
    "iterated_chain",
    "load_flight_table",
    "load_problem_config",
    "one_point_mutation",
    "parse_schedule",
    "random_search",
    "random_solution",
    "run_batch",
    "run_single",
    "schedule_cost",
    "should_stop",
    "simulated_annealing",
    "single_point_crossover",
    "summarize",
]
