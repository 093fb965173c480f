import fcntl
import functools
import json
import os
import tempfile
from pathlib import Path
from typing import Callable, Dict, Optional

from conic_floors.exceptions import CacheError
from conic_floors.logger import logger
from conic_floors.schema import engine_stats


CACHE_FORMAT = 1


class InvariantCache:
    """Memoizes integer invariants per namespace, optionally backed by a JSON file.

    Used as a decorator: ``@InvariantCache("gw_rel", key=...)``. The key
    function turns the call arguments into a string; values are plain ints.
    """

    _cache: Dict[str, Dict[str, int]] = {}
    verify = False

    def __init__(self, namespace: str, key: Optional[Callable[..., str]] = None):
        self.namespace = namespace
        self.key = key or (lambda *args, **kwargs: repr((args, sorted(kwargs.items()))))

    def __call__(self, func):
        @functools.wraps(func)
        def decorator(*args, **kwargs):
            table = self._cache.setdefault(self.namespace, {})
            key = self.key(*args, **kwargs)
            if key in table:
                engine_stats.cache_hits += 1
                if not self.verify:
                    return table[key]
                fresh = func(*args, **kwargs)
                if fresh != table[key]:
                    logger.warning(
                        f"cache mismatch for {self.namespace}[{key}]: stored {table[key]}, computed {fresh}"
                    )
                table[key] = fresh
                return fresh
            value = func(*args, **kwargs)
            table[key] = value
            return value

        decorator.cache_namespace = self.namespace
        return decorator

    @classmethod
    def clear(cls) -> None:
        cls._cache = {}

    @classmethod
    def entries(cls) -> int:
        return sum(len(t) for t in cls._cache.values())

    @staticmethod
    def _read(path: Path) -> Dict[str, Dict[str, int]]:
        if not path.exists():
            return {}
        try:
            with path.open() as f:
                document = json.load(f)
            if document.get("format") != CACHE_FORMAT:
                raise ValueError(f"unknown cache format {document.get('format')!r}")
            return {ns: {k: int(v) for k, v in t.items()} for ns, t in document["entries"].items()}
        except (ValueError, KeyError, AttributeError, TypeError) as e:
            logger.warning(f"ignoring corrupted cache file {path}: {e}")
            return {}

    @classmethod
    def load(cls, path: Path) -> None:
        for namespace, table in cls._read(path).items():
            cls._cache.setdefault(namespace, {}).update(table)
        logger.debug(f"cache loaded from {path}: {cls.entries()} entries")

    @classmethod
    def save(cls, path: Path) -> None:
        """Merge the in-memory entries into ``path`` under an exclusive lock"""
        path.parent.mkdir(parents=True, exist_ok=True)
        lock_path = path.with_suffix(path.suffix + ".lock")
        try:
            with open(lock_path, "w") as lock:
                fcntl.flock(lock, fcntl.LOCK_EX)
                merged = cls._read(path)
                for namespace, table in cls._cache.items():
                    merged.setdefault(namespace, {}).update(table)
                fd, tmp_name = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
                with os.fdopen(fd, "w") as f:
                    json.dump({"format": CACHE_FORMAT, "entries": merged}, f, sort_keys=True)
                os.replace(tmp_name, path)
                fcntl.flock(lock, fcntl.LOCK_UN)
        except OSError as e:
            raise CacheError(f"cannot write cache file {path}: {e}") from e
