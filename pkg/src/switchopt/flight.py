"""Flight-scheduling objective: schedule ingestion and the price-plus-wait cost.

A problem instance is a table of one-day flights between a shared destination
and each traveler's origin city.  A solution assigns every traveler one
outbound and one return flight by index into the table, two genes per person.
The cost charges total ticket price plus the minutes everyone spends waiting
at the destination airport (arrivals wait for the last arrival, and on the
way back everyone shows up for the earliest departure), plus a flat penalty
for an extra car-rental day whenever the group's latest arrival lands after
the earliest return departure.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

from .core import ConfigError, DimensionalityError, Domain, Solution, SwitchoptError

__all__ = [
    "ScheduleError",
    "Flight",
    "FlightProblemConfig",
    "FlightTable",
    "PersonTrip",
    "Itinerary",
    "get_minutes",
    "parse_schedule",
    "load_problem_config",
    "load_flight_table",
    "flight_domain",
    "decode_itinerary",
    "encode_itinerary",
    "schedule_cost",
]

_AIRPORT_RE = re.compile(r"^[A-Z]{3}$")
_CLOCK_RE = re.compile(r"^(\d{1,2}):(\d{2})$")

DEFAULT_PENALTY = 50


class ScheduleError(SwitchoptError):
    """Malformed or inconsistent schedule / problem-config data."""


@dataclass(frozen=True)
class Flight:
    origin: str
    dest: str
    depart: int  # minutes since midnight
    arrive: int
    price: int


@dataclass(frozen=True)
class FlightProblemConfig:
    """Problem header: who travels from where to which shared destination."""

    destination: str
    people: tuple[tuple[str, str], ...]  # (name, origin airport) pairs
    penalty: int = DEFAULT_PENALTY

    def __post_init__(self):
        if not _AIRPORT_RE.match(self.destination):
            raise ScheduleError(f"destination must be a 3-letter code, got {self.destination!r}")
        if not self.people:
            raise ScheduleError("problem config lists no people")
        for name, origin in self.people:
            if not _AIRPORT_RE.match(origin):
                raise ScheduleError(f"origin for {name!r} must be a 3-letter code, got {origin!r}")
        if self.penalty < 0:
            raise ScheduleError(f"penalty must be >= 0, got {self.penalty}")


@dataclass(frozen=True)
class FlightTable:
    """Parsed schedule plus the traveler roster it was validated against.

    `flights` maps (origin, dest) to the flights for that leg in file order;
    gene value k selects the k-th listed flight.
    """

    flights: dict[tuple[str, str], tuple[Flight, ...]]
    people: tuple[tuple[str, str], ...]
    destination: str
    penalty: int = DEFAULT_PENALTY


@dataclass(frozen=True)
class PersonTrip:
    name: str
    origin: str
    outbound_index: int
    outbound: Flight
    return_index: int
    inbound: Flight


@dataclass(frozen=True)
class Itinerary:
    trips: tuple[PersonTrip, ...]


def get_minutes(clock: str) -> int:
    """Convert an "H:MM" / "HH:MM" clock string to minutes since midnight."""
    m = _CLOCK_RE.match(clock.strip())
    if not m:
        raise ScheduleError(f"malformed clock time {clock!r}, expected H:MM")
    hours, minutes = int(m.group(1)), int(m.group(2))
    if hours > 23 or minutes > 59:
        raise ScheduleError(f"clock time {clock!r} out of range")
    return 60 * hours + minutes


def parse_schedule(
    text: str,
    config: FlightProblemConfig,
    min_flights_per_leg: int = 10,
) -> FlightTable:
    """Parse schedule file contents into a validated FlightTable.

    Each non-empty, non-comment line must read ORG,DST,H:MM,H:MM,PRICE.
    Per-leg file order is preserved.  After parsing, every person must have
    both the outbound and the return leg present with at least
    `min_flights_per_leg` flights each, so the intended gene bounds are
    actually selectable.
    """
    flights: dict[tuple[str, str], list[Flight]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = [f.strip() for f in line.split(",")]
        if len(fields) != 5:
            raise ScheduleError(f"line {lineno}: expected 5 comma-separated fields, got {len(fields)}")
        origin, dest, depart_s, arrive_s, price_s = fields
        if not _AIRPORT_RE.match(origin) or not _AIRPORT_RE.match(dest):
            raise ScheduleError(f"line {lineno}: airport codes must be 3 uppercase letters")
        try:
            depart = get_minutes(depart_s)
            arrive = get_minutes(arrive_s)
        except ScheduleError as exc:
            raise ScheduleError(f"line {lineno}: {exc}") from None
        try:
            price = int(price_s)
        except ValueError:
            raise ScheduleError(f"line {lineno}: price {price_s!r} is not an integer") from None
        if price < 0:
            raise ScheduleError(f"line {lineno}: price must be >= 0")
        flights.setdefault((origin, dest), []).append(Flight(origin, dest, depart, arrive, price))

    if not flights:
        raise ScheduleError("schedule is empty: no flight lines found")
    for name, origin in config.people:
        for leg in ((origin, config.destination), (config.destination, origin)):
            listed = flights.get(leg)
            if listed is None:
                raise ScheduleError(f"no flights for leg {leg[0]}->{leg[1]} needed by {name!r}")
            if len(listed) < min_flights_per_leg:
                raise ScheduleError(
                    f"leg {leg[0]}->{leg[1]} has {len(listed)} flights, "
                    f"need at least {min_flights_per_leg}"
                )
    frozen = {leg: tuple(listed) for leg, listed in flights.items()}
    return FlightTable(frozen, config.people, config.destination, config.penalty)


def load_problem_config(path: str | Path) -> FlightProblemConfig:
    """Read the problem-config JSON: destination, people, optional penalty."""
    raw = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ScheduleError(f"{path}: invalid JSON ({exc})") from None
    try:
        destination = data["destination"]
        people = tuple((str(name), str(origin)) for name, origin in data["people"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ScheduleError(f"{path}: expected keys 'destination' and 'people' ({exc})") from None
    penalty = data.get("penalty", DEFAULT_PENALTY)
    if not isinstance(penalty, int):
        raise ScheduleError(f"{path}: penalty must be an integer")
    return FlightProblemConfig(destination, people, penalty)


def load_flight_table(
    schedule_path: str | Path,
    config: FlightProblemConfig | str | Path,
    min_flights_per_leg: int = 10,
) -> FlightTable:
    """Convenience loader combining the schedule file and the problem config."""
    if not isinstance(config, FlightProblemConfig):
        config = load_problem_config(config)
    text = Path(schedule_path).read_text(encoding="utf-8")
    return parse_schedule(text, config, min_flights_per_leg)


def flight_domain(table: FlightTable) -> Domain:
    """Per-gene index bounds: gene 2i picks person i's outbound, 2i+1 the return."""
    bounds: list[tuple[int, int]] = []
    for _, origin in table.people:
        outbound = table.flights[(origin, table.destination)]
        inbound = table.flights[(table.destination, origin)]
        bounds.append((0, len(outbound) - 1))
        bounds.append((0, len(inbound) - 1))
    return Domain(bounds)


def _leg_flight(table: FlightTable, leg: tuple[str, str], index: int) -> Flight:
    listed = table.flights[leg]
    if not (0 <= index < len(listed)):
        raise ConfigError(
            f"gene index {index} out of range for leg {leg[0]}->{leg[1]} "
            f"({len(listed)} flights); domain does not match the table"
        )
    return listed[index]


def decode_itinerary(table: FlightTable, genes: Solution) -> Itinerary:
    """Expand a gene vector into per-person outbound and return flights."""
    if len(genes) != 2 * len(table.people):
        raise DimensionalityError(
            f"solution length {len(genes)} != 2 * {len(table.people)} people"
        )
    trips = []
    for i, (name, origin) in enumerate(table.people):
        out_idx = genes[2 * i]
        ret_idx = genes[2 * i + 1]
        outbound = _leg_flight(table, (origin, table.destination), out_idx)
        inbound = _leg_flight(table, (table.destination, origin), ret_idx)
        trips.append(PersonTrip(name, origin, out_idx, outbound, ret_idx, inbound))
    return Itinerary(tuple(trips))


def encode_itinerary(itinerary: Itinerary) -> Solution:
    """Flatten an itinerary back into its gene vector."""
    genes: Solution = []
    for trip in itinerary.trips:
        genes.append(trip.outbound_index)
        genes.append(trip.return_index)
    return genes


def schedule_cost(table: FlightTable, genes: Solution) -> float:
    """Total price plus total wait, plus the overnight-car penalty.

    Wait accounting: every arrival waits at the destination until the latest
    arrival among the group; for the return everyone reaches the airport at
    the earliest departure and waits for their own flight.  If the latest
    arrival is after the earliest return departure, one extra car-rental day
    (`table.penalty`) is charged.  Runs in one pass over the people.
    """
    n = len(table.people)
    if len(genes) != 2 * n:
        raise DimensionalityError(f"solution length {len(genes)} != 2 * {n} people")

    total_price = 0
    latest_arrival = 0
    earliest_departure = 24 * 60
    outbound_arrivals: list[int] = []
    return_departures: list[int] = []
    for i, (_, origin) in enumerate(table.people):
        outbound = _leg_flight(table, (origin, table.destination), genes[2 * i])
        inbound = _leg_flight(table, (table.destination, origin), genes[2 * i + 1])
        total_price += outbound.price + inbound.price
        outbound_arrivals.append(outbound.arrive)
        return_departures.append(inbound.depart)
        if outbound.arrive > latest_arrival:
            latest_arrival = outbound.arrive
        if inbound.depart < earliest_departure:
            earliest_departure = inbound.depart

    total_wait = 0
    for arrive, depart in zip(outbound_arrivals, return_departures):
        total_wait += (latest_arrival - arrive) + (depart - earliest_departure)

    cost = total_price + total_wait
    if latest_arrival > earliest_departure:
        cost += table.penalty
    return float(cost)
