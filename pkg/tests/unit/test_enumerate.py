"""Unit tests for enumerating depolarizations."""

from pathlib import Path

import pytest

from src.config import PolarityConfig
from src.errors import EnumerationLimitError, ImproperIdealError
from src.models import MonomialIdeal
from src.parsers.ideal_format import load_ideal, parse_ideal
from src.polar.bijection import copolar_bijection, ideal_isomorphism
from src.polar.enumerate import class_linearizations, enumerate_depolarizations
from src.polar.poset import support_poset

DATA_DIR = Path(__file__).resolve().parents[2] / "data"


@pytest.fixture
def two_depolarizations():
    return load_ideal(DATA_DIR / "two_depolarizations.ideal")


@pytest.fixture
def result(two_depolarizations):
    return enumerate_depolarizations(two_depolarizations, keep_raw=True)


@pytest.mark.unit
class TestEnumerateDepolarizations:
    """Tests for the full depolarization search."""

    def test_partitions_and_renamings(self, result):
        # y may link to one of x, z, t, u and t may link to u, but not both to u
        assert len(result.raw) == 9
        assert len(result.records) == 7
        assert sorted(r.result.num_vars for r in result.records) == [3, 3, 4, 4, 4, 4, 5]

    def test_chain_with_a_gap_adds_a_depolarization(self, result, two_depolarizations):
        gap = parse_ideal("vars: a b c d\na*b*c\na*b*d\na*c*d\na^2*d\n")

        matches = [r for r in result.records if ideal_isomorphism(r.result, gap) is not None]

        assert len(matches) == 1
        assert copolar_bijection(gap, two_depolarizations) is not None

    def test_paths_only_search(self, two_depolarizations):
        narrow = enumerate_depolarizations(two_depolarizations, keep_raw=True, paths_only=True)

        assert len(narrow.raw) == 8
        assert len(narrow.records) == 6
        assert sorted(r.result.num_vars for r in narrow.records) == [3, 3, 4, 4, 4, 5]
        assert len(narrow.maxima) == 2

    def test_fewest_variables_come_from_a_chain_with_a_gap(self):
        star_with_tail = parse_ideal("vars: a b c d e f\na*b*c*d\na*b*c*e\na*f\nb*f\n")
        three = parse_ideal("vars: y1 y2 y3\ny1^3*y2\ny1^2*y2^2\ny1*y3\ny2*y3\n")

        chains = enumerate_depolarizations(star_with_tail)
        paths = enumerate_depolarizations(star_with_tail, paths_only=True)

        assert {r.result.num_vars for r in chains.maximum_records} == {3}
        assert any(ideal_isomorphism(r.result, three) is not None for r in chains.maximum_records)
        assert {r.result.num_vars for r in paths.maximum_records} == {4}
        for record in chains.records:
            assert copolar_bijection(record.result, star_with_tail) is not None

    def test_maxima_are_both_three_variable_depolarizations(self, result):
        mixed = parse_ideal("vars: a b c\na*b^2\na^2*b\na*b*c\na^2*c\n")
        power = parse_ideal("vars: a b c\na*b^2\na*b*c\nb^3\nb^2*c\n")

        maxima = result.maximum_records

        assert len(maxima) == 2
        assert any(ideal_isomorphism(r.result, mixed) is not None for r in maxima)
        assert any(ideal_isomorphism(r.result, power) is not None for r in maxima)

    def test_every_record_is_copolar_with_the_source(self, result, two_depolarizations):
        for record in result.records:
            assert copolar_bijection(record.result, two_depolarizations) is not None

    def test_singletons_refine_everything(self, result):
        singleton = next(
            i for i, r in enumerate(result.records) if len(r.partition.blocks) == 5
        )

        below = {b for a, b in result.refinement if a == singleton}

        assert below == set(range(len(result.records))) - {singleton}
        assert all(b != singleton for _, b in result.refinement)

    def test_raw_is_empty_by_default(self, two_depolarizations):
        assert enumerate_depolarizations(two_depolarizations).raw == ()

    def test_nonsquarefree_input_is_polarized_first(self):
        zero_dimensional = load_ideal(DATA_DIR / "zero_dimensional.ideal")

        result = enumerate_depolarizations(zero_dimensional)

        fewest = [r.result for r in result.maximum_records]
        assert all(ideal.num_vars == 3 for ideal in fewest)
        assert any(copolar_bijection(ideal, zero_dimensional) is not None for ideal in fewest)

    def test_variable_limit(self):
        nested = load_ideal(DATA_DIR / "nested_supports.ideal")

        with pytest.raises(EnumerationLimitError, match="limited to 5 variables, got 10"):
            enumerate_depolarizations(nested, PolarityConfig(enumeration_variable_limit=5))

    def test_zero_ideal_raises(self):
        with pytest.raises(ImproperIdealError):
            enumerate_depolarizations(MonomialIdeal(3, ()))


@pytest.mark.unit
class TestClassLinearizations:
    """Tests for ordering the equal-C classes."""

    def test_two_element_class_gives_two_orders(self):
        poset = support_poset(load_ideal(DATA_DIR / "nested_supports.ideal"))

        orders = class_linearizations(poset, class_limit=5)

        assert len(orders) == 2
        assert all(sorted(order) == list(range(10)) for order in orders)

    def test_large_class_falls_back_to_index_order(self):
        poset = support_poset(load_ideal(DATA_DIR / "nested_supports.ideal"))

        assert class_linearizations(poset, class_limit=1) == [poset.variables]

    def test_squarefree_clique_collapses(self):
        poset = support_poset(parse_ideal("vars: x y z\nx*y*z\n"))

        assert len(class_linearizations(poset, class_limit=3)) == 6
