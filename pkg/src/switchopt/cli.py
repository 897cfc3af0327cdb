"""Command-line harness.

Three subcommands: `bench` runs seeded batches on a named benchmark function,
`flight` does the same on a schedule-file problem, and `history` emits one
run's (iteration, cost) series for external plotting.  Exit codes: 0 on
success, 2 on configuration errors, 3 on I/O or dataset errors.
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .chaining import ChainConfig
from .core import ConfigError
from .flight import ScheduleError
from .genetic import GaConfig, ReversalConfig
from .harness import (
    ALGORITHMS,
    CONSTITUENT_ALGORITHMS,
    ExperimentSpec,
    emit_history,
    emit_table,
    run_batch,
    run_single,
)
from .local_search import LocalSearchConfig, SaConfig

_EXIT_CONFIG = 2
_EXIT_IO = 3


def _algorithm_options(fn):
    """Flags for every tunable in the algorithm configs, at their defaults."""
    options = [
        click.option("--pop-size", default=100, show_default=True, help="GA population size."),
        click.option("--generations", default=500, show_default=True, help="GA generations."),
        click.option("--elite-rate", default=0.2, show_default=True, help="GA elite fraction."),
        click.option("--p-mutation", default=0.2, show_default=True,
                      help="GA probability of the primary operator (mutation; crossover for ga-reverse-ops)."),
        click.option("--n-k", default=None, type=int,
                      help="Reversal scheduling interval; default floor(generations / 2)."),
        click.option("--step-length", default=100, show_default=True,
                      help="Length of one reversal window."),
        click.option("--max-iter", default=100, show_default=True,
                      help="Iteration cap for random search and hill climbing."),
        click.option("--sa-t0", default=50000.0, show_default=True, help="SA initial temperature."),
        click.option("--sa-cooling", default=0.95, show_default=True, help="SA cooling rate."),
        click.option("--sa-t-stop", default=0.1, show_default=True, help="SA stop temperature."),
        click.option("--sa-step", default=1, show_default=True, help="SA move step size."),
        click.option("--rounds", default=1, show_default=True, help="Chaining rounds."),
        click.option("--tolerance", default=90, show_default=True,
                      help="Early-stop tolerance (lower bound of the random slack R)."),
        click.option("--n-obs", default=2, show_default=True,
                      help="Recent scores averaged by the early-stop rule."),
        click.option("--random-mutation-probability", default=0.5, show_default=True,
                      help="Chance of mutating the initial algorithm's hand-off solution."),
        click.option("--initial", default=None, type=click.Choice(CONSTITUENT_ALGORITHMS),
                      help="Initial algorithm for --algo ic."),
        click.option("--chained", default=None, type=click.Choice(CONSTITUENT_ALGORITHMS),
                      help="Chained algorithm for --algo ic."),
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


def _batch_options(fn):
    options = [
        click.option("--runs", default=20, show_default=True, help="Seeded runs per batch."),
        click.option("--seed", default=0, show_default=True, help="Master seed for the batch."),
        click.option("--parallelism", default=1, show_default=True,
                      help="Worker processes (SWITCHOPT_THREADS overrides)."),
        click.option("--out", default=None, type=click.Path(dir_okay=False),
                      help="Output file; stdout when omitted."),
        click.option("--format", "fmt", default="csv", show_default=True,
                      type=click.Choice(["csv", "json"]), help="Table output format."),
    ]
    for option in reversed(options):
        fn = option(fn)
    return fn


def _build_spec(problem: str, algorithm: str, params: dict, **extra) -> ExperimentSpec:
    return ExperimentSpec(
        problem=problem,
        algorithm=algorithm,
        runs=params["runs"],
        master_seed=params["seed"],
        parallelism=params["parallelism"],
        ga=GaConfig(
            pop_size=params["pop_size"],
            generations=params["generations"],
            elite_rate=params["elite_rate"],
            p_mutation=params["p_mutation"],
        ),
        reversal=ReversalConfig(n_k=params["n_k"], step_length=params["step_length"]),
        sa=SaConfig(
            t0=params["sa_t0"],
            cooling=params["sa_cooling"],
            t_stop=params["sa_t_stop"],
            step=params["sa_step"],
        ),
        local=LocalSearchConfig(max_iter=params["max_iter"]),
        chain=ChainConfig(
            rounds=params["rounds"],
            tolerance=params["tolerance"],
            n_obs=params["n_obs"],
            random_mutation_probability=params["random_mutation_probability"],
        ),
        initial=params["initial"],
        chained=params["chained"],
        **extra,
    )


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        click.echo(text, nl=False)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _run_batches(problem: str, algos: tuple[str, ...], params: dict, **extra) -> str:
    labeled = []
    for algo in algos:
        spec = _build_spec(problem, algo, params, **extra)
        summary, _ = run_batch(spec)
        labeled.append((algo, summary))
    return emit_table(labeled, format=params["fmt"])


@click.group()
@click.version_option(package_name="switchopt")
def main() -> None:
    """Deterministic gradient-free optimizers with reversal switching and chaining."""


@main.command()
@click.option("--function", "function_name", required=True, help="Benchmark function name.")
@click.option("--algo", "algos", multiple=True, default=("ga",), show_default=True,
              type=click.Choice(ALGORITHMS), help="Algorithm column(s) to run.")
@_batch_options
@_algorithm_options
def bench(function_name: str, algos: tuple[str, ...], **params) -> None:
    """Run seeded batches on a benchmark function and emit the stats table."""
    _guarded(lambda: _write_output(_run_batches(function_name, algos, params), params["out"]))


@main.command()
@click.option("--schedule", required=True, type=click.Path(dir_okay=False),
              help="Schedule file (ORG,DST,H:MM,H:MM,PRICE lines).")
@click.option("--config", "config_path", required=True, type=click.Path(dir_okay=False),
              help="Problem config JSON (destination, people, penalty).")
@click.option("--min-flights", default=10, show_default=True,
              help="Minimum flights required per leg.")
@click.option("--algo", "algos", multiple=True, default=("ic",), show_default=True,
              type=click.Choice(ALGORITHMS), help="Algorithm column(s) to run.")
@_batch_options
@_algorithm_options
def flight(schedule: str, config_path: str, min_flights: int, algos: tuple[str, ...], **params) -> None:
    """Run seeded batches on a flight-scheduling problem and emit the stats table."""
    _guarded(
        lambda: _write_output(
            _run_batches(
                "flight",
                algos,
                params,
                schedule_path=schedule,
                problem_config_path=config_path,
                min_flights_per_leg=min_flights,
            ),
            params["out"],
        )
    )


@main.command()
@click.option("--algo", default="ga", show_default=True, type=click.Choice(ALGORITHMS))
@click.option("--function", "function_name", default=None, help="Benchmark function name.")
@click.option("--schedule", default=None, type=click.Path(dir_okay=False))
@click.option("--config", "config_path", default=None, type=click.Path(dir_okay=False))
@click.option("--min-flights", default=10, show_default=True)
@click.option("--seed", default=0, show_default=True, help="Master seed; the emitted run is run 0.")
@click.option("--out", default=None, type=click.Path(dir_okay=False))
@_algorithm_options
def history(algo: str, function_name: str | None, schedule: str | None, config_path: str | None,
            min_flights: int, seed: int, out: str | None, **params) -> None:
    """Emit one run's (iteration, cost) CSV series."""

    def _go() -> None:
        params.update(runs=1, seed=seed, parallelism=1, fmt="csv")
        if function_name is not None:
            spec = _build_spec(function_name, algo, params)
        elif schedule is not None and config_path is not None:
            spec = _build_spec(
                "flight",
                algo,
                params,
                schedule_path=schedule,
                problem_config_path=config_path,
                min_flights_per_leg=min_flights,
            )
        else:
            raise ConfigError("history needs --function, or --schedule with --config")
        _write_output(emit_history(run_single(spec, 0)), out)

    _guarded(_go)


def _guarded(action) -> None:
    try:
        action()
    except ConfigError as exc:
        click.echo(f"config error: {exc}", err=True)
        sys.exit(_EXIT_CONFIG)
    except ScheduleError as exc:
        click.echo(f"dataset error: {exc}", err=True)
        sys.exit(_EXIT_IO)
    except OSError as exc:
        click.echo(f"i/o error: {exc}", err=True)
        sys.exit(_EXIT_IO)


if __name__ == "__main__":
    main()
