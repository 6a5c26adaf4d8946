"""Unit tests for system families and j-reliability ideals."""

from pathlib import Path

import pytest

from src.models import SystemSpec
from src.parsers.system_format import load_system
from src.reliability.families import (
    binary_k_of_n_ideal,
    consecutive_k_of_n_ideal,
    consecutive_paths,
    flow_paths,
    get_available_families,
    get_family_builder,
    j_reliability_ideal,
    minimal_paths,
    ms_k_of_n_ideal,
    ms_k_of_n_paths,
)

DATA_DIR = Path(__file__).resolve().parents[2] / "data"


def exponents(ideal):
    return {g.exponents for g in ideal.generators}


@pytest.mark.unit
class TestFamilyRegistry:
    """Tests for looking up family builders."""

    def test_available(self):
        assert get_available_families() == ["ms_k_of_n", "flow", "consecutive", "binary_k_of_n"]

    def test_unknown_family(self):
        with pytest.raises(ValueError, match="Unknown family: bridge. Available: ms_k_of_n"):
            get_family_builder("bridge")

    def test_binary_families_take_one_parameter(self):
        system = SystemSpec(
            num_components=4,
            state_counts=(1, 1, 1, 1),
            system_levels=1,
            family="consecutive",
            family_params=(2, 3),
        )

        with pytest.raises(ValueError, match="takes one parameter k"):
            minimal_paths(system, 1)


@pytest.mark.unit
class TestMultiStateKOutOfN:
    """Tests for the multi-state k-out-of-n family."""

    def test_top_level(self):
        assert exponents(ms_k_of_n_ideal((3, 2, 2), 3, 3)) == {(3, 3, 0), (3, 0, 3), (0, 3, 3)}

    def test_lower_levels_absorb_higher_paths(self):
        assert exponents(ms_k_of_n_ideal((3, 2, 2), 3, 1)) == {
            (1, 1, 1),
            (2, 2, 0),
            (2, 0, 2),
            (0, 2, 2),
        }

    def test_level_out_of_range(self):
        with pytest.raises(ValueError, match="Level 4 outside 1..3"):
            ms_k_of_n_paths((3, 2, 2), 3, 4)

    def test_threshold_out_of_range(self):
        with pytest.raises(ValueError, match="k_1 = 4 outside 1..3"):
            ms_k_of_n_paths((4, 2, 2), 3, 1)


@pytest.mark.unit
class TestBinaryFamilies:
    """Tests for the flow, consecutive and k-out-of-n families."""

    def test_flow_paths(self):
        assert flow_paths((2, 2), 3) == [(1, 2), (2, 1)]
        assert flow_paths((2, 2), 4) == [(2, 2)]

    def test_flow_level_beyond_capacity(self):
        with pytest.raises(ValueError, match="Level 5 outside 1..4"):
            flow_paths((2, 2), 5)

    def test_consecutive_windows(self):
        assert consecutive_paths(2, 4) == [(1, 1, 0, 0), (0, 1, 1, 0), (0, 0, 1, 1)]
        assert len(consecutive_k_of_n_ideal(3, 10).generators) == 8

    def test_consecutive_k_too_large(self):
        with pytest.raises(ValueError, match="k = 5 outside 1..4"):
            consecutive_paths(5, 4)

    def test_binary_k_of_n(self):
        assert exponents(binary_k_of_n_ideal(2, 3)) == {(1, 1, 0), (1, 0, 1), (0, 1, 1)}


@pytest.mark.unit
class TestReliabilityIdeal:
    """Tests for building the j-reliability ideal of a system."""

    def test_explicit_paths(self):
        system, _ = load_system(DATA_DIR / "four_component.sys")

        ideal = j_reliability_ideal(system, 1)

        assert exponents(ideal) == {
            (1, 1, 0, 0),
            (1, 0, 1, 0),
            (0, 2, 0, 0),
            (0, 1, 1, 0),
            (0, 0, 1, 1),
        }
        assert ideal.variable_names == ("x", "y", "z", "t")

    def test_level_without_paths_is_zero(self):
        system = SystemSpec(
            num_components=2,
            state_counts=(2, 2),
            system_levels=2,
            paths={1: ((1, 0), (0, 1))},
        )

        assert j_reliability_ideal(system, 2).is_zero

    def test_family_system(self):
        system, _ = load_system(DATA_DIR / "flow_network.sys")

        assert exponents(j_reliability_ideal(system, 2)) == {(2, 0), (1, 1), (0, 2)}

    def test_level_outside_system(self):
        system, _ = load_system(DATA_DIR / "flow_network.sys")

        with pytest.raises(ValueError, match="Level 5 outside 1..4"):
            j_reliability_ideal(system, 5)
