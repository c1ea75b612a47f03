"""
Persistent cache of admissibility reports.

Reports are keyed by the SHA-256 digest of the canonical spec text and stored
as plain dicts in a diskcache ``Cache`` (SQLite-backed, process-safe).
"""

import logging
import os
import shutil
from pathlib import Path
from typing import Any, Dict, Optional

from diskcache import Cache

from .constants import DEFAULT_CACHE_DIR, DEFAULT_CACHE_SIZE_MB
from .models import AdmissibilityReport

logger = logging.getLogger(__name__)


class AdmissibilityCache:
    """Admissibility reports keyed by spec digest."""

    def __init__(
        self,
        cache_dir: Path = DEFAULT_CACHE_DIR,
        max_size_mb: float = DEFAULT_CACHE_SIZE_MB,
    ):
        """
        Args:
            cache_dir: Directory holding the SQLite store
            max_size_mb: Size limit before least-recently-used eviction
        """
        size_limit = int(max_size_mb * 1024 * 1024)
        os.makedirs(cache_dir, exist_ok=True)
        self._cache = Cache(
            directory=str(cache_dir),
            size_limit=size_limit,
            eviction_policy="least-recently-used",
            statistics=True,
        )
        self.cache_dir = Path(cache_dir)
        self.max_size_mb = max_size_mb
        logger.info(f"Cache initialized at {cache_dir}: size_limit={size_limit} bytes")

    def get(self, digest: str) -> Optional[AdmissibilityReport]:
        try:
            data = self._cache.get(digest)
        except Exception as e:
            logger.warning(f"Error retrieving from cache: {e}")
            return None
        if data is None:
            return None
        try:
            report = AdmissibilityReport.from_dict(data)
        except (KeyError, TypeError, ValueError) as e:
            logger.warning(f"Discarding malformed cache entry {digest[:12]}: {e}")
            return None
        logger.debug(f"Cache hit for spec {digest[:12]}")
        return report

    def put(self, digest: str, report: AdmissibilityReport) -> None:
        try:
            self._cache.set(digest, report.to_dict())
            logger.debug(f"Cached report for spec {digest[:12]}")
        except Exception as e:
            logger.warning(f"Error adding to cache: {e}")

    def clear(self) -> int:
        """Remove every entry and reset statistics; returns the number removed."""
        try:
            removed = self._cache.clear()
            self._cache.stats(reset=True)
            logger.info("Cache cleared and statistics reset")
            return removed
        except Exception as e:
            logger.warning(f"Error clearing cache: {e}")
            return 0

    def close(self) -> None:
        try:
            self._cache.close()
        except Exception as e:
            logger.warning(f"Error closing cache: {e}")

    def __len__(self) -> int:
        try:
            return len(self._cache)
        except Exception as e:
            logger.warning(f"Error getting cache length: {e}")
            return 0

    def get_stats(self) -> Dict[str, Any]:
        try:
            hits, misses = self._cache.stats()
            return {
                "entries": len(self._cache),
                "size_bytes": self._cache.volume(),
                "max_size_mb": self.max_size_mb,
                "hits": hits,
                "misses": misses,
                "hit_rate": (hits / (hits + misses)) * 100 if hits + misses else 0.0,
            }
        except Exception as e:
            logger.warning(f"Error getting cache stats: {e}")
            return {"entries": 0, "error": str(e)}


class CacheManager:
    """Owns the process-wide default cache."""

    _instance = None
    _default_cache: Optional[AdmissibilityCache] = None

    @classmethod
    def get_instance(cls) -> "CacheManager":
        if cls._instance is None:
            cls._instance = cls()
        return cls._instance

    def get_default_cache(self, cache_dir: Optional[Path] = None) -> AdmissibilityCache:
        if CacheManager._default_cache is None:
            logger.info("Creating new default cache instance")
            CacheManager._default_cache = AdmissibilityCache(cache_dir or DEFAULT_CACHE_DIR)
        return CacheManager._default_cache

    def delete_default_cache(self) -> bool:
        """Close the default cache and remove its directory."""
        if CacheManager._default_cache is None:
            return False
        cache_dir = CacheManager._default_cache.cache_dir
        CacheManager._default_cache.close()
        CacheManager._default_cache = None
        try:
            if cache_dir.exists():
                shutil.rmtree(cache_dir)
            logger.info(f"Deleted default cache at {cache_dir}")
            return True
        except OSError as e:
            logger.error(f"Error deleting default cache: {e}")
            return False

    def reset(self) -> None:
        if CacheManager._default_cache is not None:
            CacheManager._default_cache.close()
        CacheManager._default_cache = None


def get_default_cache(cache_dir: Optional[Path] = None) -> AdmissibilityCache:
    return CacheManager.get_instance().get_default_cache(cache_dir)


def delete_default_cache() -> bool:
    return CacheManager.get_instance().delete_default_cache()
