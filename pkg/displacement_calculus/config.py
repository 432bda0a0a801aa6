"""Engine configuration with environment overrides."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path

from .errors import ConfigError


DEFAULT_WEIGHT_LIMIT = 200
DEFAULT_ORACLE_LIMIT = 12
DEFAULT_SEMIGROUP_GENUS_LIMIT = 12

ENV_WEIGHT_LIMIT = "DISPLACEMENT_WEIGHT_LIMIT"
ENV_ORACLE_LIMIT = "DISPLACEMENT_ORACLE_LIMIT"
ENV_WORKERS = "DISPLACEMENT_WORKERS"
ENV_CACHE = "DISPLACEMENT_CACHE"


def _env_int(name: str, default: int, minimum: int = 0) -> int:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}")
    if value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}")
    return value


@dataclass(frozen=True)
class EngineConfig:
    """Limits and runtime options for the difficulty engine."""
    weight_limit: int = DEFAULT_WEIGHT_LIMIT
    oracle_limit: int = DEFAULT_ORACLE_LIMIT
    workers: int = 1
    cache_path: Path | None = None
    semigroup_genus_limit: int = DEFAULT_SEMIGROUP_GENUS_LIMIT

    @classmethod
    def from_env(cls, **overrides) -> "EngineConfig":
        """Build a config from environment variables, then apply explicit overrides.

        Overrides whose value is None are ignored, so CLI flags that were not
        given fall through to the environment.
        """
        cache = os.environ.get(ENV_CACHE)
        config = cls(
            weight_limit=_env_int(ENV_WEIGHT_LIMIT, DEFAULT_WEIGHT_LIMIT),
            oracle_limit=_env_int(ENV_ORACLE_LIMIT, DEFAULT_ORACLE_LIMIT),
            workers=_env_int(ENV_WORKERS, 1, minimum=1),
            cache_path=Path(cache) if cache else None,
        )
        known = {f.name for f in fields(cls)}
        unknown = set(overrides) - known
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        given = {k: v for k, v in overrides.items() if v is not None}
        if "cache_path" in given:
            given["cache_path"] = Path(given["cache_path"])
        if given.get("workers", 1) < 1:
            raise ConfigError("workers must be >= 1")
        return replace(config, **given)
