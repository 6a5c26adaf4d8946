"""Unit tests for Betti numbers, projective dimension, regularity and height."""

from pathlib import Path

import pytest

from src.algebra.betti import betti_numbers, lcm_lattice, proj_dim, regularity
from src.algebra.height import height
from src.algebra.monomials import minimalize, polarize_ideal
from src.config import PolarityConfig
from src.errors import GeneratorLimitError, ImproperIdealError
from src.models import Monomial, MonomialIdeal
from src.parsers.ideal_format import load_ideal

DATA_DIR = Path(__file__).resolve().parents[2] / "data"


def ideal(num_vars: int, *exponents: tuple[int, ...]) -> MonomialIdeal:
    return minimalize((Monomial(e) for e in exponents), num_vars)


@pytest.mark.unit
class TestBettiNumbers:
    """Tests for the lcm-lattice Betti table."""

    def test_two_variables(self):
        table = betti_numbers(ideal(2, (1, 0), (0, 1)))

        assert table.entries == ((0, (1, 0), 1), (0, (0, 1), 1), (1, (1, 1), 1))
        assert table.proj_dim == 1
        assert table.regularity == 1

    def test_triangle_has_two_syzygies_in_one_degree(self):
        table = betti_numbers(ideal(3, (1, 1, 0), (0, 1, 1), (1, 0, 1)))

        assert table.get(1, (1, 1, 1)) == 2
        assert table.totals() == (3, 2)

    def test_four_component_system(self):
        table = betti_numbers(load_ideal(DATA_DIR / "four_component.ideal"))

        assert table.totals() == (5, 6, 2)
        assert table.graded() == {(0, 2): 5, (1, 3): 6, (2, 4): 2}

    def test_invariant_under_polarization(self):
        source = load_ideal(DATA_DIR / "four_component.ideal")
        polarized, _ = polarize_ideal(source)

        assert betti_numbers(polarized).graded() == betti_numbers(source).graded()

    def test_zero_dimensional_ideal(self):
        target = load_ideal(DATA_DIR / "zero_dimensional.ideal")

        assert proj_dim(target) == 2
        assert regularity(target) == 5

    def test_not_quasi_stable_source_is_copolar_in_invariants(self):
        source = load_ideal(DATA_DIR / "not_quasi_stable.ideal")

        assert proj_dim(source) == 2
        assert regularity(source) == 5

    def test_generator_limit(self):
        source = ideal(2, *((a, 5 - a) for a in range(6)))

        with pytest.raises(GeneratorLimitError, match="mvt_ranks"):
            betti_numbers(source, PolarityConfig(betti_generator_limit=5))

    def test_improper_ideal_raises(self):
        with pytest.raises(ImproperIdealError):
            betti_numbers(ideal(2, (0, 0)))

    def test_lcm_lattice(self):
        lattice = lcm_lattice(ideal(2, (2, 0), (1, 1), (0, 2)))

        assert lattice == {(2, 0), (1, 1), (0, 2), (2, 1), (1, 2), (2, 2)}


@pytest.mark.unit
class TestHeight:
    """Tests for the minimum hitting set."""

    @pytest.mark.parametrize(
        "name,expected",
        [("four_component.ideal", 2), ("zero_dimensional.ideal", 3), ("nested_supports.ideal", 2)],
    )
    def test_fixture_heights(self, name, expected):
        assert height(load_ideal(DATA_DIR / name)) == expected

    def test_invariant_under_polarization(self):
        source = load_ideal(DATA_DIR / "zero_dimensional.ideal")
        polarized, _ = polarize_ideal(source)

        assert height(polarized) == height(source)

    def test_zero_ideal_raises(self):
        with pytest.raises(ImproperIdealError):
            height(minimalize([], 2))
