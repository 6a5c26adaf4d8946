"""Unit tests for truncation bounds."""

from fractions import Fraction
from pathlib import Path

import pytest

from src.models import Monomial, MonomialIdeal, ProbabilityTable
from src.parsers.system_format import load_system
from src.reliability.bounds import bounds, ideal_bounds

DATA_DIR = Path(__file__).resolve().parents[2] / "data"


@pytest.fixture
def four_component():
    return load_system(DATA_DIR / "four_component.sys")


@pytest.fixture
def two_links():
    ideal = MonomialIdeal(2, (Monomial((1, 0)), Monomial((0, 1))))
    probs = ProbabilityTable.from_rows([["0.1", "0.9"], ["0.1", "0.9"]])
    return ideal, probs


@pytest.mark.unit
class TestIdealBounds:
    """Tests for the partial sums of resolution ranks."""

    def test_generators_alone_overshoot(self, two_links):
        ideal, probs = two_links

        steps = ideal_bounds(ideal, probs)

        assert [s.value for s in steps] == [Fraction("1.8"), Fraction("0.99")]
        assert [s.direction for s in steps] == ["upper", "exact"]
        assert all(s.brackets for s in steps)

    def test_depth_beyond_top_is_exact(self, two_links):
        ideal, probs = two_links

        (step,) = ideal_bounds(ideal, probs, depths=[5])

        assert step.direction == "exact"
        assert step.value == Fraction("0.99")

    def test_negative_depth(self, two_links):
        ideal, probs = two_links

        with pytest.raises(ValueError, match="non-negative"):
            ideal_bounds(ideal, probs, depths=[-1])

    def test_unknown_resolution(self, two_links):
        ideal, probs = two_links

        with pytest.raises(ValueError, match="Unknown resolution: koszul"):
            ideal_bounds(ideal, probs, resolution="koszul")

    def test_zero_ideal(self, two_links):
        _, probs = two_links

        (step,) = ideal_bounds(MonomialIdeal(2, ()), probs)

        assert step.value == 0
        assert step.direction == "exact"


@pytest.mark.unit
class TestSystemBounds:
    """Tests for bounds on R_j."""

    def test_tree_ladder(self, four_component):
        system, probs = four_component

        steps = bounds(system, probs, 1)

        assert [s.value for s in steps] == [
            Fraction("3.22"),
            Fraction("0.147"),
            Fraction("0.9606"),
        ]
        assert [s.direction for s in steps] == ["upper", "lower", "exact"]
        assert all(s.brackets for s in steps)

    def test_taylor_ladder_brackets(self, four_component):
        system, probs = four_component

        steps = bounds(system, probs, 1, resolution="taylor")

        assert len(steps) == 5
        assert steps[0].value == Fraction("3.22")
        assert steps[-1].value == Fraction("0.9606")
        assert [s.direction for s in steps[:-1]] == ["upper", "lower", "upper", "lower"]
        assert all(s.brackets for s in steps)

    def test_selected_depths(self, four_component):
        system, probs = four_component

        steps = bounds(system, probs, 1, depths=[1])

        assert [(s.depth, s.direction) for s in steps] == [(1, "lower")]
