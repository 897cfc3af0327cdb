"""Operator semantics: one-point mutation and single-point crossover."""

from __future__ import annotations

import pytest

from switchopt import (
    ConfigError,
    Domain,
    OperatorConfig,
    RngStream,
    one_point_mutation,
    random_solution,
    single_point_crossover,
)


def find_mutation_seed(length: int, want_index: int, want_down: bool) -> int:
    """Seed whose first two draws select (want_index, want_down).

    Mirrors the operator's documented draw order: position via randint, then
    direction via random() < down_probability.
    """
    for seed in range(100_000):
        rng = RngStream(seed)
        index = rng.randint(0, length - 1)
        down = rng.random() < 0.5
        if index == want_index and down is want_down:
            return seed
    raise AssertionError("no seed found")


def find_crossover_seed(length: int, want_k: int) -> int:
    for seed in range(100_000):
        if RngStream(seed).randint(1, length - 1) == want_k:
            return seed
    raise AssertionError("no seed found")


class TestOnePointMutation:
    def test_step_down(self):
        seed = find_mutation_seed(2, want_index=0, want_down=True)
        out = one_point_mutation([3, 5], Domain.uniform(0, 9, 2), RngStream(seed))
        assert out == [2, 5]

    def test_boundary_redirect(self):
        seed = find_mutation_seed(2, want_index=0, want_down=True)
        out = one_point_mutation([0, 5], Domain.uniform(0, 9, 2), RngStream(seed))
        assert out == [1, 5]  # down exits the bounds, so the move goes up

    def test_degenerate_bound_is_noop(self):
        for seed in range(10):
            assert one_point_mutation([7], Domain([(7, 7)]), RngStream(seed)) == [7]

    def test_input_not_modified(self):
        genes = [3, 5]
        one_point_mutation(genes, Domain.uniform(0, 9, 2), RngStream(1))
        assert genes == [3, 5]

    def test_custom_step(self):
        seed = find_mutation_seed(1, want_index=0, want_down=False)
        cfg = OperatorConfig(mutation_step=3)
        out = one_point_mutation([2], Domain.uniform(0, 9, 1), RngStream(seed), cfg)
        assert out == [5]

    def test_hamming_distance_at_most_one(self):
        rng = RngStream(23)
        domain = Domain.uniform(-4, 4, 6)
        for _ in range(1000):
            genes = random_solution(domain, rng)
            mutated = one_point_mutation(genes, domain, rng)
            assert sum(a != b for a, b in zip(genes, mutated)) <= 1

    def test_bounds_preserved(self):
        rng = RngStream(29)
        for _ in range(1000):
            length = rng.randint(1, 6)
            bounds = []
            for _ in range(length):
                lo = rng.randint(-5, 5)
                bounds.append((lo, lo + rng.randint(0, 6)))
            domain = Domain(bounds)
            mutated = one_point_mutation(random_solution(domain, rng), domain, rng)
            assert all(lo <= g <= hi for g, (lo, hi) in zip(mutated, domain.bounds))

    def test_config_validation(self):
        with pytest.raises(ConfigError):
            OperatorConfig(mutation_step=0)
        with pytest.raises(ConfigError):
            OperatorConfig(down_probability=1.5)


class TestSinglePointCrossover:
    def test_known_split(self):
        seed = find_crossover_seed(4, want_k=2)
        child = single_point_crossover([1, 2, 3, 4], [5, 6, 7, 8], RngStream(seed))
        assert child == [1, 2, 7, 8]

    def test_identical_parents(self):
        for seed in range(10):
            assert single_point_crossover([9, 9, 9], [9, 9, 9], RngStream(seed)) == [9, 9, 9]

    def test_both_parents_contribute(self):
        a, b = [0, 0, 0, 0], [1, 1, 1, 1]
        rng = RngStream(31)
        for _ in range(200):
            child = single_point_crossover(a, b, rng)
            assert 0 in child and 1 in child

    def test_child_valid_for_shared_domain(self):
        rng = RngStream(37)
        domain = Domain.uniform(-3, 3, 5)
        for _ in range(1000):
            a = random_solution(domain, rng)
            b = random_solution(domain, rng)
            child = single_point_crossover(a, b, rng)
            domain.check(child)
            assert all(c in (x, y) for c, x, y in zip(child, a, b))

    def test_length_one_rejected(self):
        with pytest.raises(ConfigError):
            single_point_crossover([1], [2], RngStream(0))

    def test_length_mismatch_rejected(self):
        with pytest.raises(ConfigError):
            single_point_crossover([1, 2], [3], RngStream(0))
