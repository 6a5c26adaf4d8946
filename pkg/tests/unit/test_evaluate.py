"""Unit tests for exact reliability evaluation."""

from fractions import Fraction
from pathlib import Path

import pytest
import sympy

from src.bench import binomial_table
from src.algebra.hilbert import hilbert_numerator
from src.algebra.monomials import polarize_ideal
from src.errors import SlotPatternError
from src.models import Monomial, MonomialIdeal, PathPartition, ProbabilityTable
from src.parsers.system_format import load_system
from src.polar.depolarize import depolarize
from src.reliability.evaluate import (
    check_table,
    evaluate,
    ideal_reliability,
    iid_coefficients,
    iid_expression,
    iid_polynomial,
    iid_value,
    monomial_probability,
    reliability,
    reliability_profile,
)
from src.reliability.families import consecutive_k_of_n_ideal, j_reliability_ideal, ms_k_of_n_ideal

DATA_DIR = Path(__file__).resolve().parents[2] / "data"

F = Fraction


@pytest.fixture
def four_component():
    return load_system(DATA_DIR / "four_component.sys")


@pytest.fixture
def ms_system():
    return load_system(DATA_DIR / "ms_k_out_of_3.sys")


@pytest.fixture
def flow_system():
    return load_system(DATA_DIR / "flow_network.sys")


@pytest.mark.unit
class TestMonomialProbability:
    """Tests for Pr(c >= a) products."""

    def test_component_exponents(self, four_component):
        _, probs = four_component

        assert monomial_probability((1, 2, 0, 0), probs) == F("0.8") * F("0.5")

    def test_wrong_width_without_map(self, four_component):
        _, probs = four_component

        with pytest.raises(ValueError, match="pass a slot map"):
            monomial_probability((1, 1), probs)

    def test_non_prefix_slots_are_rejected(self, four_component):
        system, probs = four_component
        _, polar_map = polarize_ideal(j_reliability_ideal(system, 1))
        # flat variable 2 is the second copy of y
        with pytest.raises(SlotPatternError):
            monomial_probability((0, 0, 1, 0, 0), probs, polar_map.inverse())


@pytest.mark.unit
class TestReliability:
    """Tests for R_j and r_j."""

    @pytest.mark.parametrize(
        "level, at_least, exactly",
        [(3, "0.396", "0.396"), (2, "0.826", "0.43"), (1, "0.89", "0.064"), (0, "1", "0.11")],
    )
    def test_multi_state_k_out_of_three(self, ms_system, level, at_least, exactly):
        system, probs = ms_system

        report = reliability(system, probs, level)

        assert report.reliability == F(at_least)
        assert report.point_mass == F(exactly)

    def test_k_out_of_three_table(self, ms_system):
        _, probs = ms_system

        assert probs.point_masses[1] == (F(0), F("0.2"), F("0.2"), F("0.6"))
        assert [probs.at_least(1, a) for a in (1, 2, 3)] == [F(1), F("0.8"), F("0.6")]

    def test_flow_profile(self, flow_system):
        system, probs = flow_system

        profile = reliability_profile(system, probs)

        assert [r.reliability for r in profile] == [F(1), F("0.99"), F("0.97"), F("0.8"), F("0.64")]
        assert sum(r.point_mass for r in profile) == 1

    def test_level_outside_range(self, flow_system):
        system, probs = flow_system

        with pytest.raises(ValueError, match="Level 5 outside 0..4"):
            reliability(system, probs, 5)

    def test_table_must_fit_system(self, flow_system):
        system, _ = flow_system
        probs = ProbabilityTable.from_rows([["0.5", "0.5"], ["0.5", "0.5"]])

        with pytest.raises(ValueError, match="state counts"):
            check_table(system, probs)


@pytest.mark.unit
class TestEvaluationThroughMaps:
    """Tests that polarized and depolarized numerators give the same value."""

    def test_original_ideal(self, four_component):
        system, probs = four_component

        assert ideal_reliability(j_reliability_ideal(system, 1), probs) == F("0.9606")

    def test_polarized_ideal(self, four_component):
        system, probs = four_component
        polar, polar_map = polarize_ideal(j_reliability_ideal(system, 1))

        value = evaluate(hilbert_numerator(polar), probs, polar_map.inverse())

        assert value == F("0.9606")

    def test_depolarized_ideal(self, four_component):
        system, probs = four_component
        polar, polar_map = polarize_ideal(j_reliability_ideal(system, 1))
        record = depolarize(polar, PathPartition(((0,), (1, 2), (3, 4))))
        slot_map = record.variable_map.then(polar_map.inverse())

        value = ideal_reliability(record.result, probs, slot_map)

        assert record.result.num_vars == 3
        assert value == F("0.9606")

    def test_zero_and_unit_ideals(self, four_component):
        _, probs = four_component

        assert ideal_reliability(MonomialIdeal(4, ()), probs) == 0
        assert ideal_reliability(MonomialIdeal(4, (Monomial.unit(4),)), probs) == 1


@pytest.mark.unit
class TestIidPolynomial:
    """Tests for identically distributed components."""

    def test_consecutive_two_of_four(self):
        p1 = sympy.Symbol("P1")

        expression = iid_polynomial(hilbert_numerator(consecutive_k_of_n_ideal(2, 4)))

        assert sympy.expand(expression - (3 * p1**2 - 2 * p1**3)) == 0

    def test_top_level_of_k_out_of_three(self):
        p3 = sympy.Symbol("P3")

        expression = iid_polynomial(hilbert_numerator(ms_k_of_n_ideal((3, 2, 2), 3, 3)))

        assert sympy.expand(expression - (3 * p3**2 - 2 * p3**3)) == 0

    def test_folding_collapses_terms_by_level_counts(self):
        numerator = hilbert_numerator(consecutive_k_of_n_ideal(2, 4))

        coefficients = iid_coefficients(numerator)

        assert len(numerator) == 5
        assert coefficients == {(2,): 3, (3,): -2}

    def test_terms_with_equal_level_counts_merge(self):
        numerator = hilbert_numerator(MonomialIdeal(2, (Monomial((1, 0)), Monomial((0, 1)))))

        coefficients = iid_coefficients(numerator)

        assert coefficients == {(1,): 2, (2,): -1}
        p1 = sympy.Symbol("P1")
        assert sympy.expand(iid_expression(coefficients) - (2 * p1 - p1**2)) == 0

    def test_empty_and_constant_coefficients(self):
        assert iid_expression({}) == 0
        assert iid_expression({(): 4}) == 4

    @pytest.mark.parametrize("level", [1, 2, 3])
    @pytest.mark.parametrize("q", [F(1, 2), F(1, 10)])
    def test_value_matches_table_evaluation(self, level, q):
        numerator = hilbert_numerator(ms_k_of_n_ideal((3, 2, 2), 3, level))
        at_least = binomial_table(3, q)
        masses = tuple(
            at_least[s - 1] - (at_least[s] if s < 3 else 0) for s in range(1, 4)
        )
        row = (1 - at_least[0], *masses)
        probs = ProbabilityTable((row, row, row))

        assert iid_value(iid_coefficients(numerator), at_least) == evaluate(numerator, probs)
