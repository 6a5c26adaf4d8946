"""Unit tests for the quasi-stable check."""

from pathlib import Path

import pytest

from src.parsers.ideal_format import load_ideal, parse_ideal
from src.polar.quasi_stable import is_quasi_stable

DATA_DIR = Path(__file__).resolve().parents[2] / "data"


@pytest.mark.unit
class TestIsQuasiStable:
    """Tests for comparing saturations."""

    @pytest.mark.parametrize(
        "name, expected",
        [("not_quasi_stable.ideal", False), ("zero_dimensional.ideal", True)],
    )
    def test_fixtures(self, name, expected):
        assert is_quasi_stable(load_ideal(DATA_DIR / name)) is expected

    def test_maximal_ideal(self):
        assert is_quasi_stable(parse_ideal("vars: x y\nx\ny\n"))

    def test_depends_on_variable_order(self):
        assert is_quasi_stable(parse_ideal("vars: x y\nx^2\nx*y\n"))
        assert not is_quasi_stable(parse_ideal("vars: x y\ny^2\nx*y\n"))

    def test_principal_squarefree(self):
        assert not is_quasi_stable(parse_ideal("vars: x y\nx*y\n"))
