"""
Repository base classes and helpers.
"""

from __future__ import annotations

from pathlib import Path

from src.exceptions import CacheError
from src.logger import get_logger


class BaseRepository:
    """Common file-store functionality."""

    def __init__(self, root: Path):
        self.root = Path(root)
        self.logger = get_logger(self.__class__.__name__)

    def _handle_exception(self, action: str, exc: Exception) -> None:
        self.logger.exception("Cache error during %s", action)
        raise CacheError(f"Cache error during {action}") from exc

    def _ensure_root(self) -> None:
        try:
            self.root.mkdir(parents=True, exist_ok=True)
        except OSError as exc:
            self._handle_exception("create cache directory", exc)
