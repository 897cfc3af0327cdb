"""Regenerate data/synthetic_schedule.txt.

The file is a stand-in six-city dataset for demos and tests.  It is fully
deterministic: 10 flights per direction for every (origin, LGA) pair, with
departure, duration, and price drawn from switchopt's own seeded stream, so
rerunning this script reproduces the committed file byte for byte.
"""

from __future__ import annotations

from pathlib import Path

from switchopt import RngStream

ORIGINS = ["BOS", "DAL", "CAK", "MIA", "ORD", "OMA"]
DESTINATION = "LGA"
SEED = 1060
FLIGHTS_PER_LEG = 10


def _clock(minutes: int) -> str:
    return f"{minutes // 60}:{minutes % 60:02d}"


def build() -> str:
    rng = RngStream(SEED)
    lines = [
        "# Synthetic six-city round-trip schedule (generated, not real airline data).",
        f"# Produced with switchopt.RngStream({SEED}); regenerate with tools/make_synthetic_schedule.py.",
        "# Fields: origin,dest,depart,arrive,price",
    ]
    for origin in ORIGINS:
        for leg in ((origin, DESTINATION), (DESTINATION, origin)):
            flights = []
            for _ in range(FLIGHTS_PER_LEG):
                depart = rng.randint(360, 1260)
                duration = rng.randint(90, 240)
                arrive = min(depart + duration, 1439)
                price = rng.randint(60, 300)
                flights.append((depart, arrive, price))
            flights.sort()
            lines.extend(
                f"{leg[0]},{leg[1]},{_clock(dep)},{_clock(arr)},{price}"
                for dep, arr, price in flights
            )
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    out = Path(__file__).resolve().parent.parent / "data" / "synthetic_schedule.txt"
    out.write_text(build(), encoding="utf-8")
    print(f"wrote {out}")
