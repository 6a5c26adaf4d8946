"""Integration tests for full-size benchmark and experiment runs."""

import time

import pytest

from src.bench import (
    BenchStats,
    maximal_depolarization,
    monotone_in_level,
    run_consecutive_bench,
    run_ms_experiment,
)
from src.polar.paths import min_path_partition
from src.polar.poset import ordered_support_poset, support_poset
from src.reliability.families import consecutive_k_of_n_ideal

DECREASING_THRESHOLDS = (9, 8, 7, 6, 5, 5, 4, 4, 3, 2)


@pytest.mark.integration
@pytest.mark.slow
class TestConsecutiveSystems:
    """Depolarization of consecutive k-out-of-n systems at full size."""

    @pytest.mark.parametrize("n, k", [(10, 3), (20, 6), (100, 30)])
    def test_path_partition_size(self, n, k):
        ideal = consecutive_k_of_n_ideal(k, n)

        partition = min_path_partition(ordered_support_poset(support_poset(ideal)))

        assert partition.num_blocks == n + 2 - 2 * k

    def test_hundred_thirty_is_faster_after_depolarization(self):
        stats = BenchStats()

        (row,) = run_consecutive_bench([(100, 30)], stats)

        assert row.gens == 71
        assert row.equal
        assert row.time_depolarized_ms < row.time_original_ms
        assert maximal_depolarization(consecutive_k_of_n_ideal(30, 100)).result.num_vars == 42


@pytest.mark.integration
@pytest.mark.slow
class TestDecreasingKOutOfTen:
    """All level polynomials of the decreasing k-out-of-10 system."""

    def test_every_level_is_monotone(self):
        start = time.perf_counter()

        rows = run_ms_experiment(DECREASING_THRESHOLDS, 10)

        assert time.perf_counter() - start < 300
        assert [row["level"] for row in rows] == list(range(1, 11))
        assert monotone_in_level(rows)
