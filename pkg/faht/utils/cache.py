# faht/utils/cache.py

import logging
import os
from pathlib import Path
from typing import Any, Dict, Hashable, Optional, Tuple, Union

from cachetools import LRUCache

logger = logging.getLogger("faht_cache")


class DatasetCache:
    """LRU cache for parsed datasets with hit/miss statistics.

    Keys include the file's modification time and size, so an edited file
    is parsed again instead of served stale.
    """

    def __init__(self, maxsize: int = 8):
        """Initialize dataset cache.

        Args:
            maxsize: Maximum number of parsed datasets kept (default: 8)
        """
        self.cache = LRUCache(maxsize=maxsize)
        self.hits = 0
        self.misses = 0

    def get(self, key: Hashable) -> Optional[Any]:
        """Get a parsed dataset.

        Args:
            key: Cache key, usually `file_key` plus the serialized dataset config

        Returns:
            Cached value or None if not cached
        """
        if key in self.cache:
            self.hits += 1
            logger.debug(f"Cache HIT: {key}")
            return self.cache[key]
        self.misses += 1
        logger.debug(f"Cache MISS: {key}")
        return None

    def set(self, key: Hashable, value: Any) -> None:
        """Store a parsed dataset, evicting the least recently used one when full.

        Args:
            key: Cache key
            value: Value to cache
        """
        self.cache[key] = value
        logger.debug(f"Cache SET: {key}")

    def clear(self) -> None:
        """Drop all entries and reset the hit/miss counters."""
        self.cache.clear()
        self.hits = 0
        self.misses = 0
        logger.debug("Dataset cache cleared")

    def stats(self) -> Dict[str, Any]:
        """Get cache statistics.

        Returns:
            Dict with hits, misses, hit_rate, size and maxsize
        """
        total = self.hits + self.misses
        return {
            "hits": self.hits,
            "misses": self.misses,
            "hit_rate": self.hits / total if total > 0 else 0,
            "size": len(self.cache),
            "maxsize": self.cache.maxsize,
        }


def file_key(path: Union[str, Path]) -> Tuple[str, int, int]:
    """Identity of a file's current contents.

    Args:
        path: Dataset file path, relative or absolute

    Returns:
        (resolved path, mtime in ns, size)

    Raises:
        FileNotFoundError: If the file does not exist
    """
    resolved = Path(path).resolve()
    st = os.stat(resolved)
    return str(resolved), st.st_mtime_ns, st.st_size


# Process-wide cache; each worker process gets its own.
dataset_cache = DatasetCache(maxsize=int(os.getenv("FAHT_DATASET_CACHE_SIZE", "8")))

