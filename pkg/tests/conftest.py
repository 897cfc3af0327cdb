"""Shared fixtures: dataset paths and small constructed flight problems."""

from __future__ import annotations

from pathlib import Path

import pytest

from switchopt import FlightProblemConfig, FlightTable, load_flight_table, parse_schedule

REPO_ROOT = Path(__file__).resolve().parent.parent
DATA_DIR = REPO_ROOT / "data"
SYNTHETIC_SCHEDULE = DATA_DIR / "synthetic_schedule.txt"
CANONICAL_SCHEDULE = DATA_DIR / "schedule.txt"
PROBLEM_CONFIG = DATA_DIR / "problem.json"


def minutes(clock: str) -> int:
    hours, mins = clock.split(":")
    return int(hours) * 60 + int(mins)


def schedule_line(origin: str, dest: str, depart: str, arrive: str, price: int) -> str:
    return f"{origin},{dest},{depart},{arrive},{price}"


def build_table(
    lines: list[str],
    people: list[tuple[str, str]],
    destination: str = "DST",
    penalty: int = 50,
    min_flights_per_leg: int = 1,
) -> FlightTable:
    config = FlightProblemConfig(destination, tuple(people), penalty)
    return parse_schedule("\n".join(lines) + "\n", config, min_flights_per_leg)


@pytest.fixture(scope="session")
def synthetic_table() -> FlightTable:
    return load_flight_table(SYNTHETIC_SCHEDULE, PROBLEM_CONFIG)


@pytest.fixture(scope="session")
def one_person_table() -> FlightTable:
    """One traveler, two flights per leg; the all-zeros genome costs 250."""
    lines = [
        schedule_line("AAA", "DST", "8:00", "10:00", 100),
        schedule_line("AAA", "DST", "7:00", "9:00", 300),
        schedule_line("DST", "AAA", "12:00", "14:00", 150),
        schedule_line("DST", "AAA", "11:00", "13:00", 400),
    ]
    return build_table(lines, [("Ann", "AAA")])
