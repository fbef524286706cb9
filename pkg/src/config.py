"""
Configuration loading and validation for the Koornwinder toolkit.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from dotenv import load_dotenv


class ConfigError(Exception):
    """Raised when the application configuration is invalid or incomplete."""


def _get_int(
    name: str,
    default: int,
    *,
    min_value: Optional[int] = None,
    max_value: Optional[int] = None,
) -> int:
    raw_value = os.getenv(name)
    if raw_value is None or raw_value == "":
        value = default
    else:
        try:
            value = int(raw_value)
        except ValueError as exc:
            raise ConfigError(
                f"Environment variable {name} must be an integer"
            ) from exc
    if min_value is not None and value < min_value:
        raise ConfigError(f"{name} must be >= {min_value}")
    if max_value is not None and value > max_value:
        raise ConfigError(f"{name} must be <= {max_value}")
    return value


def _get_fraction(name: str, default: str) -> Fraction:
    raw_value = os.getenv(name) or default
    try:
        value = Fraction(raw_value.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(
            f"Environment variable {name} must be a rational like 3/2"
        ) from exc
    if value <= 0 or value == 1:
        raise ConfigError(f"{name} must be positive and different from 1")
    return value


@dataclass(frozen=True)
class Settings:
    cache_dir: Optional[str]

    log_level: str
    log_file: Optional[str]
    log_retention_days: int

    truncation: int
    grid: Optional[int]

    sample_base: Fraction
    sample_retries: int
    sample_seed: int


def _build_settings() -> Settings:
    return Settings(
        cache_dir=os.getenv("KOORN_CACHE") or None,
        log_level=os.getenv("KOORN_LOG_LEVEL", "INFO").upper(),
        log_file=os.getenv("KOORN_LOG_FILE") or None,
        log_retention_days=_get_int(
            "KOORN_LOG_RETENTION_DAYS", default=7, min_value=1, max_value=365
        ),
        truncation=_get_int("KOORN_TRUNCATION", default=40, min_value=0),
        grid=(
            _get_int("KOORN_GRID", default=64, min_value=4)
            if os.getenv("KOORN_GRID")
            else None
        ),
        sample_base=_get_fraction("KOORN_SAMPLE_BASE", "3/2"),
        sample_retries=_get_int(
            "KOORN_SAMPLE_RETRIES", default=20, min_value=1, max_value=1000
        ),
        sample_seed=_get_int("KOORN_SAMPLE_SEED", default=1995),
    )


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """
    Load settings from the environment (and .env file) with validation.

    Returns:
        A cached Settings instance.

    Raises:
        ConfigError: if a variable is present but invalid.
    """

    env_file_override = os.getenv("KOORN_ENV_FILE")
    if env_file_override:
        load_dotenv(env_file_override, override=True)
    else:
        load_dotenv()
    return _build_settings()
