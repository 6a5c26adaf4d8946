"""Unit tests for depolarization along path partitions."""

from pathlib import Path

import pytest

from src.algebra.betti import betti_numbers
from src.algebra.monomials import minimalize, polarize_ideal
from src.errors import ImproperIdealError, InvalidPartitionError
from src.models import Monomial, PathPartition
from src.parsers.ideal_format import load_ideal, parse_ideal
from src.polar.bijection import ideal_isomorphism
from src.polar.depolarize import depolarize, upward
from src.polar.poset import support_poset

DATA_DIR = Path(__file__).resolve().parents[2] / "data"


@pytest.fixture
def polar_four_component():
    return load_ideal(DATA_DIR / "four_component_polar.ideal")


@pytest.fixture
def nested():
    return load_ideal(DATA_DIR / "nested_supports.ideal")


def exponents(ideal):
    return {g.exponents for g in ideal.generators}


@pytest.mark.unit
class TestDepolarize:
    """Tests for collapsing path blocks into variables."""

    def test_four_component_polarization(self, polar_four_component):
        record = depolarize(polar_four_component, PathPartition(((0,), (1, 2), (3, 4))))

        assert exponents(record.result) == {
            (1, 1, 0),
            (1, 0, 1),
            (0, 2, 0),
            (0, 1, 1),
            (0, 0, 2),
        }
        assert record.result.variable_names == ("y1", "y2", "y3")
        assert record.variable_map.image((1, 2)) == (2, 1)
        assert record.variable_map.image((2, 2)) == (4, 1)

    def test_chain_with_order_inside_a_class(self, nested):
        partition = PathPartition(((3, 1, 0, 2), (5, 4), (6, 7, 8), (9,)))

        record = depolarize(nested, partition)

        assert exponents(record.result) == {
            (4, 0, 0, 0),
            (1, 1, 1, 0),
            (3, 2, 0, 0),
            (0, 0, 3, 0),
            (0, 0, 2, 1),
        }

    def test_custom_names(self, polar_four_component):
        record = depolarize(
            polar_four_component, PathPartition(((0,), (1, 2), (3, 4))), names=("a", "b", "c")
        )

        assert record.result.format() == "<a*b, a*c, b^2, b*c, c^2>"

    def test_polarizing_the_result_recovers_the_source(self, nested):
        record = depolarize(nested, PathPartition(((3, 1, 0, 2), (5, 4), (6, 7, 8), (9,))))
        polarized, _ = polarize_ideal(record.result)

        assert ideal_isomorphism(polarized, nested) is not None

    def test_betti_numbers_are_preserved(self, polar_four_component):
        record = depolarize(polar_four_component, PathPartition(((0,), (1, 2), (3, 4))))

        assert betti_numbers(record.result).graded() == betti_numbers(polar_four_component).graded()

    def test_incomparable_block_raises(self, polar_four_component):
        with pytest.raises(InvalidPartitionError) as excinfo:
            depolarize(polar_four_component, PathPartition(((0, 2), (1,), (3, 4))))

        assert excinfo.value.block is not None

    def test_non_squarefree_input_raises(self):
        source = load_ideal(DATA_DIR / "four_component.ideal")

        with pytest.raises(ValueError, match="squarefree"):
            depolarize(source, PathPartition(((0,), (1,), (2,), (3,))))

    def test_unit_ideal_raises(self):
        with pytest.raises(ImproperIdealError):
            depolarize(minimalize([Monomial((0, 0))], 2), PathPartition(((0,), (1,))))

    def test_upward_sorts_a_block(self, nested):
        poset = support_poset(nested)

        assert upward(poset, (1, 0), (2, 0, 1, 3)) == (3, 1, 0, 2)


@pytest.mark.unit
class TestChainDepolarization:
    """Tests for collapsing chains that skip elements."""

    @pytest.fixture
    def star_with_tail(self):
        return parse_ideal("vars: a b c d e f\na*b*c*d\na*b*c*e\na*f\nb*f\n")

    def test_gap_chain_gives_three_variables(self, star_with_tail):
        partition = PathPartition(((0, 2, 3), (1, 4), (5,)))

        record = depolarize(star_with_tail, partition, chains=True)

        assert exponents(record.result) == {(3, 1, 0), (2, 2, 0), (1, 0, 1), (0, 1, 1)}
        assert record.variable_map.image((1, 2)) == (4, 1)
        polar, _ = polarize_ideal(record.result)
        assert ideal_isomorphism(polar, star_with_tail) is not None

    def test_gap_chain_needs_the_chain_flag(self, star_with_tail):
        with pytest.raises(InvalidPartitionError, match="not a path") as excinfo:
            depolarize(star_with_tail, PathPartition(((0, 2, 3), (1, 4), (5,))))

        assert excinfo.value.block == (1, 4)

    def test_incomparable_block_still_raises(self, star_with_tail):
        with pytest.raises(InvalidPartitionError, match="not a chain"):
            depolarize(star_with_tail, PathPartition(((0, 2), (1,), (3, 4), (5,))), chains=True)
