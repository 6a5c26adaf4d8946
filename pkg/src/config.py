"""Computation limits and runtime settings.

Values come from the dataclass defaults, then POLARITY_* environment
variables (a .env file is honoured because the CLI calls load_dotenv()),
then an optional YAML file passed with --config.
"""

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path
from typing import Any

import yaml
from loguru import logger

ENV_PREFIX = "POLARITY_"


@dataclass(frozen=True)
class PolarityConfig:
    """Limits for the exact (and potentially exponential) computations."""

    betti_generator_limit: int = 20
    enumeration_variable_limit: int = 12
    linearization_class_limit: int = 5
    bijection_search_limit: int = 200_000
    exhaustive_state_limit: int = 10_000_000
    taylor_generator_limit: int = 12
    monte_carlo_chunk_size: int = 100_000
    decimal_places: int = 12
    log_dir: str = "logs"

    @classmethod
    def from_env(cls) -> "PolarityConfig":
        """Build a config from POLARITY_<FIELD> environment variables.

        Returns:
            Config with environment overrides applied to the defaults

        Raises:
            ValueError: If an integer setting is not an integer
        """
        overrides: dict[str, Any] = {}
        for f in fields(cls):
            raw = os.getenv(f"{ENV_PREFIX}{f.name.upper()}")
            if raw is None:
                continue
            overrides[f.name] = _coerce(f.name, raw, f.type)
        if overrides:
            logger.debug(f"Config overrides from environment: {overrides}")
        return cls(**overrides)

    @classmethod
    def from_yaml(cls, path: str | Path, base: "PolarityConfig | None" = None) -> "PolarityConfig":
        """Load limits from a YAML mapping, layered over ``base``.

        Args:
            path: YAML file with keys named like the dataclass fields
            base: Config to override (defaults to from_env())

        Returns:
            Merged config

        Raises:
            FileNotFoundError: If the file doesn't exist
            ValueError: If the file is not a mapping or has unknown keys
        """
        config_path = Path(path)
        if not config_path.exists():
            raise FileNotFoundError(f"Config file not found: {path}")

        with open(config_path, "r", encoding="utf-8") as f:
            data = yaml.safe_load(f) or {}

        if not isinstance(data, dict):
            raise ValueError(f"Config file must contain a mapping: {path}")

        known = {f.name: f for f in fields(cls)}
        unknown = sorted(set(data) - set(known))
        if unknown:
            available = ", ".join(known)
            raise ValueError(
                f"Unknown config keys: {', '.join(unknown)}. Available: {available}"
            )

        overrides = {
            key: _coerce(key, str(value), known[key].type) for key, value in data.items()
        }
        logger.info(f"Loaded config from {config_path}")
        return replace(base or cls.from_env(), **overrides)


def _coerce(name: str, raw: str, annotation: Any) -> Any:
    if annotation in (int, "int"):
        try:
            value = int(raw.replace("_", ""))
        except ValueError:
            raise ValueError(f"Config value for {name} must be an integer, got {raw!r}")
        if value < 1:
            raise ValueError(f"Config value for {name} must be positive, got {value}")
        return value
    return raw


DEFAULT_CONFIG = PolarityConfig()


def resolve_config(config: PolarityConfig | None) -> PolarityConfig:
    """Return ``config`` or the module default."""
    return config if config is not None else DEFAULT_CONFIG
