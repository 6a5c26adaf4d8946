"""Benchmarks: depolarized versus original Hilbert computations.

``run_consecutive_bench`` times the numerator of the consecutive
k-out-of-n ideal against the numerator of its maximal depolarization.
``run_ms_experiment`` computes every reliability polynomial of a
multi-state k-out-of-n system in the identically distributed form.
"""

import time
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from loguru import logger

from src.algebra.hilbert import hilbert_numerator
from src.models import DepolarizationRecord, MonomialIdeal
from src.polar.depolarize import depolarize
from src.polar.paths import min_path_partition
from src.polar.poset import ordered_support_poset, squarefree_form, support_poset
from src.reliability.evaluate import iid_coefficients, iid_expression, iid_value
from src.reliability.families import consecutive_k_of_n_ideal, ms_k_of_n_ideal

BENCH_COLUMNS = ("n", "k", "gens", "time_original_ms", "time_depolarized_ms", "equal")
DEFAULT_GRID = (Fraction(1, 10), Fraction(3, 10), Fraction(1, 2), Fraction(7, 10), Fraction(9, 10))


@dataclass(frozen=True)
class BenchRow:
    n: int
    k: int
    gens: int
    time_original_ms: float
    time_depolarized_ms: float
    equal: bool

    def as_dict(self) -> dict[str, object]:
        return {column: getattr(self, column) for column in BENCH_COLUMNS}


class BenchStats:
    """Track benchmark outcomes for the summary report."""

    def __init__(self):
        self.cases = 0
        self.faster = 0
        self.mismatches: list[tuple[int, int]] = []
        self.total_original_ms = 0.0
        self.total_depolarized_ms = 0.0

    def add_row(self, row: BenchRow) -> None:
        """Record one timed case."""
        self.cases += 1
        self.total_original_ms += row.time_original_ms
        self.total_depolarized_ms += row.time_depolarized_ms
        if row.time_depolarized_ms < row.time_original_ms:
            self.faster += 1
        if not row.equal:
            self.mismatches.append((row.n, row.k))
            logger.error(f"Graded numerators differ for n={row.n}, k={row.k}")

    def print_summary(self) -> None:
        """Log the benchmark summary."""
        logger.info("=" * 60)
        logger.info("BENCHMARK SUMMARY")
        logger.info("=" * 60)
        logger.info(f"Cases: {self.cases}")
        logger.info(f"Depolarized faster: {self.faster}/{self.cases}")
        logger.info(f"Total original: {self.total_original_ms:.1f} ms")
        logger.info(f"Total depolarized: {self.total_depolarized_ms:.1f} ms")
        if self.mismatches:
            logger.info(f"Mismatched cases: {self.mismatches}")
        logger.info("=" * 60)


def maximal_depolarization(ideal: MonomialIdeal) -> DepolarizationRecord:
    """Depolarize along a minimum path partition of the ordered support poset."""
    squarefree = squarefree_form(ideal)
    poset = support_poset(squarefree)
    partition = min_path_partition(ordered_support_poset(poset))
    return depolarize(squarefree, partition, poset=poset)


def _timed_graded(ideal: MonomialIdeal) -> tuple[dict[int, int], float]:
    start = time.perf_counter()
    numerator = hilbert_numerator(ideal)
    elapsed = (time.perf_counter() - start) * 1000
    return numerator.total_degree_specialization(), elapsed


def run_consecutive_bench(
    cases: Iterable[tuple[int, int]], stats: BenchStats | None = None
) -> list[BenchRow]:
    """Time both numerators for each (n, k) consecutive system.

    Only the numerator computation is timed; building the ideal and its
    depolarization is excluded.
    """
    rows = []
    for n, k in cases:
        ideal = consecutive_k_of_n_ideal(k, n)
        record = maximal_depolarization(ideal)
        original, time_original = _timed_graded(ideal)
        depolarized, time_depolarized = _timed_graded(record.result)
        row = BenchRow(
            n=n,
            k=k,
            gens=len(ideal.generators),
            time_original_ms=round(time_original, 3),
            time_depolarized_ms=round(time_depolarized, 3),
            equal=original == depolarized,
        )
        logger.info(
            f"n={n} k={k}: {row.gens} generators, {record.result.num_vars} variables after "
            f"depolarization, {row.time_original_ms} ms vs {row.time_depolarized_ms} ms"
        )
        if stats is not None:
            stats.add_row(row)
        rows.append(row)
    return rows


def binomial_table(levels: int, q: Fraction) -> tuple[Fraction, ...]:
    """P_a = Pr(state >= a) when a component's state is Binomial(levels, q)."""
    masses = [comb(levels, s) * q**s * (1 - q) ** (levels - s) for s in range(levels + 1)]
    return tuple(sum(masses[a:], Fraction(0)) for a in range(1, levels + 1))


def run_ms_experiment(
    k: Sequence[int], n: int, grid: Sequence[Fraction] = DEFAULT_GRID
) -> list[dict[str, object]]:
    """Reliability polynomials of every level of an MS k-out-of-n system.

    Returns:
        One row per level with generator and term counts, the polynomial in
        P1..Pm, and its value for each binomial parameter in ``grid``
    """
    levels = len(k)
    tables = {q: binomial_table(levels, q) for q in grid}
    rows = []
    for j in range(1, levels + 1):
        start = time.perf_counter()
        ideal = ms_k_of_n_ideal(k, n, j)
        numerator = hilbert_numerator(ideal)
        coefficients = iid_coefficients(numerator)
        row: dict[str, object] = {
            "level": j,
            "gens": len(ideal.generators),
            "terms": len(numerator),
            "iid_terms": len(coefficients),
            "time_ms": round((time.perf_counter() - start) * 1000, 3),
            "polynomial": str(iid_expression(coefficients)),
        }
        for q, table in tables.items():
            row[f"q={float(q):g}"] = float(iid_value(coefficients, table))
        logger.info(f"Level {j}: {row['gens']} generators, {row['terms']} numerator terms")
        rows.append(row)
    return rows


def monotone_in_level(rows: Sequence[dict[str, object]]) -> bool:
    """True when every grid column is non-increasing from level 1 upwards."""
    columns = [c for c in rows[0] if str(c).startswith("q=")] if rows else []
    return all(
        float(rows[i][c]) >= float(rows[i + 1][c]) - 1e-12
        for c in columns
        for i in range(len(rows) - 1)
    )

