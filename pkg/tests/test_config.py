"""
Tests for environment settings and logging configuration.
"""

from __future__ import annotations

from fractions import Fraction as F

import pytest

from src.config import ConfigError, get_settings
from src.logger import _build_logging_config


def test_defaults(monkeypatch):
    monkeypatch.delenv("KOORN_SAMPLE_BASE", raising=False)
    monkeypatch.delenv("KOORN_SAMPLE_RETRIES", raising=False)
    settings = get_settings()
    assert settings.truncation == 40
    assert settings.grid is None
    assert settings.sample_base == F(3, 2)
    assert settings.sample_retries == 20
    assert settings.cache_dir is None


def test_environment_overrides(monkeypatch, tmp_path):
    monkeypatch.setenv("KOORN_CACHE", str(tmp_path))
    monkeypatch.setenv("KOORN_SAMPLE_BASE", "5/3")
    monkeypatch.setenv("KOORN_GRID", "128")
    settings = get_settings()
    assert settings.cache_dir == str(tmp_path)
    assert settings.sample_base == F(5, 3)
    assert settings.grid == 128


@pytest.mark.parametrize(
    "name, value",
    [
        ("KOORN_SAMPLE_RETRIES", "many"),
        ("KOORN_SAMPLE_RETRIES", "0"),
        ("KOORN_GRID", "2"),
        ("KOORN_SAMPLE_BASE", "1"),
        ("KOORN_SAMPLE_BASE", "x/2"),
    ],
)
def test_invalid_values_raise(monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    with pytest.raises(ConfigError):
        get_settings()


def test_logging_config_adds_rotating_file(tmp_path):
    log_file = tmp_path / "logs" / "koornwinder.log"
    config = _build_logging_config("DEBUG", log_file=str(log_file), backup_count=3)
    assert set(config["handlers"]) == {"console", "file"}
    assert config["handlers"]["file"]["backupCount"] == 3
    assert config["root"]["handlers"] == ["console", "file"]
    assert log_file.parent.is_dir()
    assert set(_build_logging_config("INFO")["handlers"]) == {"console"}
