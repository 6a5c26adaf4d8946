"""Unit tests for configuration loading."""

import os
from pathlib import Path
from unittest.mock import patch

import pytest

from src.config import DEFAULT_CONFIG, PolarityConfig, resolve_config

DATA_DIR = Path(__file__).resolve().parents[2] / "data"


@pytest.mark.unit
class TestPolarityConfig:
    """Tests for defaults, environment and YAML layering."""

    def test_resolve_default(self):
        assert resolve_config(None) is DEFAULT_CONFIG
        assert DEFAULT_CONFIG.enumeration_variable_limit == 12

    @patch.dict(os.environ, {"POLARITY_BETTI_GENERATOR_LIMIT": "8", "POLARITY_LOG_DIR": "/tmp/x"})
    def test_environment_overrides(self):
        config = PolarityConfig.from_env()

        assert config.betti_generator_limit == 8
        assert config.log_dir == "/tmp/x"
        assert config.taylor_generator_limit == 12

    @patch.dict(os.environ, {"POLARITY_EXHAUSTIVE_STATE_LIMIT": "1_000"})
    def test_underscores_in_integers(self):
        assert PolarityConfig.from_env().exhaustive_state_limit == 1000

    @patch.dict(os.environ, {"POLARITY_DECIMAL_PLACES": "many"})
    def test_bad_integer(self):
        with pytest.raises(ValueError, match="decimal_places must be an integer"):
            PolarityConfig.from_env()

    @patch.dict(os.environ, {"POLARITY_DECIMAL_PLACES": "0"})
    def test_non_positive_integer(self):
        with pytest.raises(ValueError, match="must be positive"):
            PolarityConfig.from_env()

    def test_yaml_over_base(self):
        base = PolarityConfig(taylor_generator_limit=4)

        config = PolarityConfig.from_yaml(DATA_DIR / "limits.yaml", base)

        assert config.betti_generator_limit == 16
        assert config.enumeration_variable_limit == 10
        assert config.decimal_places == 8
        assert config.taylor_generator_limit == 4

    def test_yaml_unknown_key(self, tmp_path):
        path = tmp_path / "bad.yaml"
        path.write_text("betti_limit: 3\n", encoding="utf-8")

        with pytest.raises(ValueError, match="Unknown config keys: betti_limit. Available:"):
            PolarityConfig.from_yaml(path, PolarityConfig())

    def test_yaml_must_be_mapping(self, tmp_path):
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n", encoding="utf-8")

        with pytest.raises(ValueError, match="must contain a mapping"):
            PolarityConfig.from_yaml(path, PolarityConfig())

    def test_empty_yaml_keeps_base(self, tmp_path):
        path = tmp_path / "empty.yaml"
        path.write_text("", encoding="utf-8")
        base = PolarityConfig(decimal_places=3)

        assert PolarityConfig.from_yaml(path, base) == base

    def test_missing_yaml(self, tmp_path):
        with pytest.raises(FileNotFoundError, match="Config file not found"):
            PolarityConfig.from_yaml(tmp_path / "absent.yaml")
