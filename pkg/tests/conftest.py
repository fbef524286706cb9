"""
Shared pytest fixtures for the Koornwinder toolkit.
"""

from __future__ import annotations

import os
from fractions import Fraction as F
from pathlib import Path
from typing import Generator, List

import pytest

# Set environment variables before importing app modules
os.environ.setdefault("KOORN_LOG_LEVEL", "WARNING")
os.environ.setdefault("KOORN_SAMPLE_SEED", "1995")
os.environ.pop("KOORN_CACHE", None)

from src.config import get_settings  # noqa: E402
from src.models import GrassmannSetup, ParamSet  # noqa: E402
from src.repository.poly_cache_repo import PolynomialCacheRepository  # noqa: E402


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch) -> Generator[None, None, None]:
    """
    Drop cached settings around every test so monkeypatched env vars apply.
    """

    for name in ("KOORN_CACHE", "KOORN_GRID", "KOORN_TRUNCATION"):
        monkeypatch.delenv(name, raising=False)
    get_settings.cache_clear()
    yield
    get_settings.cache_clear()


@pytest.fixture
def generic_params() -> ParamSet:
    return ParamSet(F(1, 2), F(1, 3), F(1, 5), F(-1, 7), F(2, 9), F(1, 11))


@pytest.fixture
def zero_params() -> ParamSet:
    """a = b = c = d = 0 at q = 1/2, where the one-variable case is explicit."""

    return ParamSet(F(1, 2), F(1, 3), 0, 0, 0, 0)


@pytest.fixture
def param_sets(generic_params: ParamSet) -> List[ParamSet]:
    return [
        generic_params,
        ParamSet(F(2, 3), F(1, 2), F(1, 2), F(1, 3), F(-1, 4), F(3, 5)),
        ParamSet(F(1, 3), F(2, 5), F(-1, 2), F(1, 4), F(1, 6), F(-2, 7)),
    ]


@pytest.fixture
def grassmann_setup() -> GrassmannSetup:
    return GrassmannSetup(n=4, l=1, q=F(1, 2), s=1, u=1)


@pytest.fixture
def cache_dir(tmp_path: Path) -> Path:
    return tmp_path / "cache"


@pytest.fixture
def cache_repo(cache_dir: Path) -> PolynomialCacheRepository:
    return PolynomialCacheRepository(cache_dir)
