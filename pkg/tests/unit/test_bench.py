"""Unit tests for the benchmark and experiment drivers."""

from fractions import Fraction

import pytest

from src.bench import (
    BENCH_COLUMNS,
    BenchRow,
    BenchStats,
    binomial_table,
    maximal_depolarization,
    monotone_in_level,
    run_consecutive_bench,
    run_ms_experiment,
)
from src.reliability.families import consecutive_k_of_n_ideal


@pytest.mark.unit
class TestConsecutiveBench:
    """Tests for timing original against depolarized numerators."""

    def test_maximal_depolarization_variable_count(self):
        record = maximal_depolarization(consecutive_k_of_n_ideal(3, 10))

        assert record.result.num_vars == 10 + 2 - 2 * 3

    def test_rows_and_stats(self):
        stats = BenchStats()

        rows = run_consecutive_bench([(10, 3), (8, 2)], stats)

        assert [(r.n, r.k, r.gens) for r in rows] == [(10, 3, 8), (8, 2, 7)]
        assert all(r.equal for r in rows)
        assert stats.cases == 2
        assert stats.mismatches == []
        assert tuple(rows[0].as_dict()) == BENCH_COLUMNS

    def test_stats_record_mismatches(self):
        stats = BenchStats()
        row = BenchRow(n=5, k=2, gens=4, time_original_ms=2.0, time_depolarized_ms=1.0, equal=False)

        stats.add_row(row)
        stats.print_summary()

        assert stats.faster == 1
        assert stats.mismatches == [(5, 2)]
        assert stats.total_original_ms == 2.0


@pytest.mark.unit
class TestMultiStateExperiment:
    """Tests for the i.i.d. reliability polynomials."""

    def test_binomial_table(self):
        assert binomial_table(2, Fraction(1, 2)) == (Fraction(3, 4), Fraction(1, 4))

    def test_levels_of_k_out_of_three(self):
        rows = run_ms_experiment((3, 2, 2), 3, grid=(Fraction(1, 2),))

        assert [row["level"] for row in rows] == [1, 2, 3]
        assert [row["gens"] for row in rows] == [4, 3, 3]
        assert [row["terms"] for row in rows] == [7, 4, 4]
        # P_3 = 1/8 for Binomial(3, 1/2)
        assert rows[2]["q=0.5"] == pytest.approx(3 / 64 - 2 / 512)
        assert monotone_in_level(rows)

    def test_monotone_detects_increase(self):
        rows = [{"level": 1, "q=0.5": 0.2}, {"level": 2, "q=0.5": 0.3}]

        assert not monotone_in_level(rows)
