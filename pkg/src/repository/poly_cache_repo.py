"""
Persistent cache of Koornwinder polynomials, one JSON file per entry.
"""

from __future__ import annotations

import hashlib
import json
import os
import tempfile
import threading
from pathlib import Path
from typing import Optional, Sequence

from pydantic import ValidationError

from src.models import KoornwinderPoly, ParamSet
from src.repository import BaseRepository
from src.schemas import CACHE_VERSION, CacheEntryModel, PolynomialModel
from src.weights.dominance import make_weight


def cache_key(lam: Sequence[int], params: ParamSet) -> str:
    """Canonical text of (l, λ, params)."""

    lam = make_weight(lam)
    parts = ",".join(str(p) for p in lam)
    return f"l={len(lam)};lambda={parts};{params.canonical()}"


class PolynomialCacheRepository(BaseRepository):
    """Content-addressed file store for KoornwinderPoly values."""

    _lock = threading.Lock()

    def __init__(self, root: Path):
        super().__init__(root)

    def path_for(self, key: str) -> Path:
        digest = hashlib.sha256(key.encode("utf-8")).hexdigest()
        return self.root / f"{digest}.json"

    def get(self, lam: Sequence[int], params: ParamSet) -> Optional[KoornwinderPoly]:
        """
        Load an entry; unreadable, stale or mismatched files count as misses.
        """

        key = cache_key(lam, params)
        path = self.path_for(key)
        if not path.exists():
            self.logger.debug("Cache miss for %s", key)
            return None
        try:
            entry = CacheEntryModel.model_validate_json(path.read_text("utf-8"))
        except (OSError, ValueError, ValidationError) as exc:
            self.logger.warning("Ignoring corrupted cache file %s: %s", path, exc)
            return None
        if entry.version != CACHE_VERSION or entry.key != key:
            self.logger.warning(
                "Ignoring cache file %s (version %s, key %s)",
                path,
                entry.version,
                entry.key,
            )
            return None
        try:
            poly = entry.polynomial.to_poly()
        except (ValueError, ArithmeticError) as exc:
            self.logger.warning("Ignoring undecodable cache file %s: %s", path, exc)
            return None
        self.logger.debug("Cache hit for %s", key)
        return poly

    def put(self, poly: KoornwinderPoly) -> Path:
        """Write atomically: temp file in the cache directory, then rename."""

        key = cache_key(poly.lam, poly.params)
        path = self.path_for(key)
        entry = CacheEntryModel(key=key, polynomial=PolynomialModel.from_poly(poly))
        payload = json.dumps(
            entry.model_dump(mode="json", by_alias=True), indent=2, sort_keys=True
        )
        self._ensure_root()
        with self._lock:
            tmp_name: Optional[str] = None
            try:
                fd, tmp_name = tempfile.mkstemp(
                    dir=self.root, prefix=".tmp-", suffix=".json"
                )
                with os.fdopen(fd, "w", encoding="utf-8") as handle:
                    handle.write(payload + "\n")
                os.replace(tmp_name, path)
            except OSError as exc:
                if tmp_name is not None and os.path.exists(tmp_name):
                    os.unlink(tmp_name)
                self._handle_exception("write cache entry", exc)
        self.logger.debug("Cached %s at %s", key, path.name)
        return path
