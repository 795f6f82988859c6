############################################################
# utils/cache.py contains a small on-disk JSON cache for
# results that are expensive to rebuild (template tables
# and node polynomials)
############################################################

import os
import json
import logging
from pathlib import Path

from .. import config

__all__ = ["DiskCache", "default_cache_dir"]

logger = logging.getLogger(__name__)

def default_cache_dir() -> Path:
    # The environment variable wins over the user cache directory
    override = os.environ.get(config.CACHE_ENV_VAR)
    if override:
        return Path(override)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / config.CACHE_DIR_NAME

class DiskCache:
    # Entries live in <directory>/<kind>-<delta>.json and carry the cache format version
    def __init__(self, directory=None):
        self._directory = Path(directory) if directory is not None else default_cache_dir()

    @property
    def directory(self) -> Path:
        return self._directory

    def _path(self, kind: str, delta: int) -> Path:
        return self._directory / f"{kind}-{delta}.json"

    def get(self, kind: str, delta: int):
        path = self._path(kind, delta)
        if not path.exists():
            return None
        try:
            with path.open("r") as f:
                stored = json.load(f)
        except (OSError, json.JSONDecodeError) as error:
            logger.warning("ignoring unreadable cache entry %s: %s", path, error)
            return None
        if stored.get("version") != config.CACHE_FORMAT_VERSION:
            logger.info("ignoring cache entry %s written by another format version", path)
            return None
        logger.debug("cache hit for %s at cogenus %s", kind, delta)
        return stored["payload"]

    def put(self, kind: str, delta: int, payload: dict):
        self._directory.mkdir(parents=True, exist_ok=True)
        path = self._path(kind, delta)
        # Written to a sibling file first so a crash never leaves half an entry
        partial = path.with_suffix(".part")
        with partial.open("w") as f:
            json.dump({"version": config.CACHE_FORMAT_VERSION, "kind": kind, "delta": delta, "payload": payload}, f)
        partial.replace(path)

    def clear(self):
        if not self._directory.exists():
            return
        for path in self._directory.glob("*.json"):
            path.unlink()

    def __repr__(self):
        return f"DiskCache({str(self._directory)!r})"
