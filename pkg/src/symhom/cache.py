"""A small content-addressed result cache on disk.

Each entry is a JSON file holding the key, the payload and a SHA-256 of the
payload's canonical serialisation.  A file whose hash does not match is
treated as missing: the caller recomputes, a warning is logged, and the entry
is rewritten.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Any, Callable

log = logging.getLogger("symhom.cache")

ENV_VAR = "SYMHOM_CACHE_DIR"


def _canonical(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def digest(obj: Any) -> str:
    return hashlib.sha256(_canonical(obj).encode()).hexdigest()


class ResultCache:
    def __init__(self, directory: str | os.PathLike | None):
        self.directory = Path(directory) if directory else None
        self.hits = 0
        self.misses = 0
        if self.directory is not None:
            self.directory.mkdir(parents=True, exist_ok=True)

    @property
    def enabled(self) -> bool:
        return self.directory is not None

    def _path(self, key: Any) -> Path:
        return self.directory / f"{digest(key)[:40]}.json"

    def load(self, key: Any) -> Any | None:
        if not self.enabled:
            return None
        path = self._path(key)
        if not path.exists():
            return None
        try:
            doc = json.loads(path.read_text())
            if doc.get("key") != json.loads(_canonical(key)) or doc.get("sha256") != digest(doc["payload"]):
                raise ValueError("hash mismatch")
        except (ValueError, KeyError, TypeError) as exc:
            log.warning("corrupt cache entry %s (%s); recomputing", path.name, exc)
            return None
        return doc["payload"]

    def store(self, key: Any, payload: Any) -> None:
        if not self.enabled:
            return
        doc = {"key": key, "payload": payload, "sha256": digest(payload)}
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            fh.write(_canonical(doc))
        os.replace(tmp, self._path(key))

    def get_or_compute(self, key: Any, compute: Callable[[], Any]) -> Any:
        hit = self.load(key)
        if hit is not None:
            self.hits += 1
            return hit
        self.misses += 1
        payload = compute()
        self.store(key, payload)
        return payload


def cache_roundtrip(cache: ResultCache, key: Any, payload: Any) -> Any:
    """Store ``payload`` and read it back."""
    cache.store(key, payload)
    return cache.load(key)
