"""Benchmark cost functions with integer box domains and known optima.

Eleven classic test functions: six in 13 dimensions (Rosenbrock, Zakharov,
Griewank, Brown, Sphere, Schwefel) and five in 2 dimensions (Booth,
Ackley N2, Three-hump camel, Schaffer N1, Matyas).  Each is paired with an
integer domain sized so the known optimizer sits on the searchable lattice.
Schwefel's continuous minimizer (420.9687 per coordinate) is not an integer,
so its spec stores the best integer-lattice point (421 everywhere) and the
exact cost there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

from .core import ConfigError, DimensionalityError, Domain, Solution

__all__ = ["BenchmarkSpec", "catalog", "by_name", "evaluate_benchmark"]

SCHWEFEL_OFFSET = 418.9829


def sphere(x: Sequence[int]) -> float:
    """Sum of squares; minimum 0 at the origin."""
    return float(sum(v * v for v in x))


def rosenbrock(x: Sequence[int]) -> float:
    """Banana valley sum_i 100(x_{i+1} - x_i^2)^2 + (1 - x_i)^2; minimum 0 at all-ones."""
    total = 0.0
    for i in range(len(x) - 1):
        a = x[i + 1] - x[i] * x[i]
        b = 1.0 - x[i]
        total += 100.0 * a * a + b * b
    return total


def zakharov(x: Sequence[int]) -> float:
    """sum x_i^2 + (sum 0.5 i x_i)^2 + (sum 0.5 i x_i)^4; minimum 0 at the origin."""
    squares = 0.0
    weighted = 0.0
    for i, v in enumerate(x, start=1):
        squares += v * v
        weighted += 0.5 * i * v
    return squares + weighted**2 + weighted**4


def griewank(x: Sequence[int]) -> float:
    """sum x_i^2 / 4000 - prod cos(x_i / sqrt(i)) + 1; minimum 0 at the origin."""
    quad = 0.0
    trig = 1.0
    for i, v in enumerate(x, start=1):
        quad += v * v / 4000.0
        trig *= math.cos(v / math.sqrt(i))
    return quad - trig + 1.0


def brown(x: Sequence[int]) -> float:
    """sum (x_i^2)^(x_{i+1}^2 + 1) + (x_{i+1}^2)^(x_i^2 + 1); minimum 0 at the origin."""
    total = 0.0
    for i in range(len(x) - 1):
        a = float(x[i] * x[i])
        b = float(x[i + 1] * x[i + 1])
        total += a ** (b + 1.0) + b ** (a + 1.0)
    return total


def schwefel(x: Sequence[int]) -> float:
    """418.9829 n - sum x_i sin(sqrt(|x_i|)); continuous minimum near 420.9687 per coordinate."""
    return SCHWEFEL_OFFSET * len(x) - sum(v * math.sin(math.sqrt(abs(v))) for v in x)


def booth(x: Sequence[int]) -> float:
    """(x + 2y - 7)^2 + (2x + y - 5)^2; minimum 0 at (1, 3)."""
    a, b = x
    return float((a + 2 * b - 7) ** 2 + (2 * a + b - 5) ** 2)


def ackley_n2(x: Sequence[int]) -> float:
    """-200 exp(-0.2 sqrt(x^2 + y^2)); minimum -200 at (0, 0)."""
    a, b = x
    return -200.0 * math.exp(-0.2 * math.sqrt(a * a + b * b))


def three_hump_camel(x: Sequence[int]) -> float:
    """2x^2 - 1.05x^4 + x^6/6 + xy + y^2; minimum 0 at (0, 0)."""
    a, b = x
    return 2.0 * a * a - 1.05 * a**4 + a**6 / 6.0 + a * b + b * b


def schaffer_n1(x: Sequence[int]) -> float:
    """0.5 + (sin^2(x^2 + y^2) - 0.5) / (1 + 0.001(x^2 + y^2))^2; minimum 0 at (0, 0)."""
    a, b = x
    r2 = float(a * a + b * b)
    s = math.sin(r2)
    return 0.5 + (s * s - 0.5) / (1.0 + 0.001 * r2) ** 2


def matyas(x: Sequence[int]) -> float:
    """0.26(x^2 + y^2) - 0.48xy; minimum 0 at (0, 0)."""
    a, b = x
    return 0.26 * (a * a + b * b) - 0.48 * a * b


@dataclass(frozen=True)
class BenchmarkSpec:
    """A benchmark function bundled with its searchable domain and optimum."""

    name: str
    dimensionality: int
    formula: Callable[[Sequence[int]], float]
    domain: Domain
    known_optimum_cost: float
    known_optimizer: tuple[int, ...]


# Best cost reachable on the integer lattice for Schwefel in 13 dimensions:
# all coordinates at 421, the integer closest to the continuous minimizer.
SCHWEFEL13_LATTICE_OPTIMUM = 0.0017677901241768268

_SPECS: tuple[BenchmarkSpec, ...] = (
    BenchmarkSpec("rosenbrock13", 13, rosenbrock, Domain.uniform(-5, 10, 13), 0.0, (1,) * 13),
    BenchmarkSpec("zakharov13", 13, zakharov, Domain.uniform(-10, 10, 13), 0.0, (0,) * 13),
    BenchmarkSpec("griewank13", 13, griewank, Domain.uniform(-10, 10, 13), 0.0, (0,) * 13),
    BenchmarkSpec("brown13", 13, brown, Domain.uniform(-10, 10, 13), 0.0, (0,) * 13),
    BenchmarkSpec("sphere13", 13, sphere, Domain.uniform(-10, 10, 13), 0.0, (0,) * 13),
    BenchmarkSpec(
        "schwefel13",
        13,
        schwefel,
        Domain.uniform(-500, 500, 13),
        SCHWEFEL13_LATTICE_OPTIMUM,
        (421,) * 13,
    ),
    BenchmarkSpec("booth", 2, booth, Domain.uniform(-10, 10, 2), 0.0, (1, 3)),
    BenchmarkSpec("ackley_n2", 2, ackley_n2, Domain.uniform(-10, 10, 2), -200.0, (0, 0)),
    BenchmarkSpec("three_hump_camel", 2, three_hump_camel, Domain.uniform(-10, 10, 2), 0.0, (0, 0)),
    BenchmarkSpec("schaffer_n1", 2, schaffer_n1, Domain.uniform(-10, 10, 2), 0.0, (0, 0)),
    BenchmarkSpec("matyas", 2, matyas, Domain.uniform(-10, 10, 2), 0.0, (0, 0)),
)

_BY_NAME = {spec.name: spec for spec in _SPECS}


def catalog() -> list[BenchmarkSpec]:
    """All benchmark specs, in a stable order."""
    return list(_SPECS)


def by_name(name: str) -> BenchmarkSpec:
    try:
        return _BY_NAME[name]
    except KeyError:
        known = ", ".join(sorted(_BY_NAME))
        raise ConfigError(f"unknown benchmark {name!r}; known: {known}") from None


def evaluate_benchmark(spec: BenchmarkSpec, genes: Solution) -> float:
    """Evaluate `spec` at `genes`, checking dimensionality first."""
    if len(genes) != spec.dimensionality:
        raise DimensionalityError(
            f"{spec.name} expects {spec.dimensionality} genes, got {len(genes)}"
        )
    return spec.formula(genes)
