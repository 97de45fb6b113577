"""Content-addressed on-disk result cache.

Entries are keyed by a SHA-256 of the canonical job description and store
their own payload digest, so a damaged file is detected and recomputed.
Any IO problem degrades to a cache miss with a logged warning.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path

log = logging.getLogger(__name__)


def job_key(*parts) -> str:
    blob = json.dumps(parts, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


class ResultCache:
    def __init__(self, directory: str | os.PathLike):
        self.directory = Path(directory)

    def _path(self, key: str) -> Path:
        return self.directory / f"{key}.json"

    def get(self, key: str) -> dict | None:
        path = self._path(key)
        try:
            raw = path.read_bytes()
        except FileNotFoundError:
            return None
        except OSError as exc:
            log.warning("cache read failed for %s: %s", path, exc)
            return None
        try:
            header, payload = raw.split(b"\n", 1)
            if header.decode() != "sha256:" + hashlib.sha256(payload).hexdigest():
                raise ValueError("digest mismatch")
            return json.loads(payload)
        except (ValueError, UnicodeDecodeError) as exc:
            log.warning("ignoring corrupted cache entry %s (%s)", path, exc)
            return None

    def put(self, key: str, value: dict) -> None:
        payload = json.dumps(value, sort_keys=True).encode()
        blob = b"sha256:" + hashlib.sha256(payload).hexdigest().encode() + b"\n" + payload
        try:
            self.directory.mkdir(parents=True, exist_ok=True)
            fd, tmp = tempfile.mkstemp(dir=self.directory, prefix=".tmp-")
            try:
                with os.fdopen(fd, "wb") as fh:
                    fh.write(blob)
                os.replace(tmp, self._path(key))
            except BaseException:
                os.unlink(tmp)
                raise
        except OSError as exc:
            log.warning("cache write failed for %s: %s", self.directory, exc)
