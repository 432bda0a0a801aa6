"""Persistent JSON cache of difficulty results."""

from __future__ import annotations

import json
import logging
import os
import tempfile
from datetime import datetime
from pathlib import Path

from .engine import DifficultyResult, verify_sequence
from .errors import CacheIoError, DisplacementError
from .parser import parse_certificate_rows, parse_partition
from .partition import Partition

logger = logging.getLogger(__name__)

CACHE_VERSION = 1


class DifficultyCache:
    """Difficulty results keyed by canonical partition text, saved as JSON.

    Entries are re-verified when loaded; anything that fails is dropped with
    a warning. Writes are batched: the file is rewritten every
    ``save_interval`` new entries and on ``flush()``.
    """

    def __init__(self, path: str | Path, save_interval: int = 5):
        self.path = Path(path)
        self.save_interval = save_interval
        self.entries: dict[str, dict] = {}
        self.discarded: list[str] = []
        self._pending = 0

    def load(self) -> "DifficultyCache":
        """Read the cache file if it exists. Raises CacheIoError on unreadable files."""
        if not self.path.exists():
            return self
        try:
            with open(self.path, encoding='utf-8') as f:
                data = json.load(f)
        except (OSError, json.JSONDecodeError) as e:
            raise CacheIoError(f"cannot read cache {self.path}: {e}")

        if not isinstance(data, dict) or data.get("version") != CACHE_VERSION:
            logger.warning("cache %s has an unknown version; ignoring it", self.path)
            return self

        for key, entry in (data.get("entries") or {}).items():
            try:
                target = parse_partition(key)
                certificate = parse_certificate_rows(entry["certificate"])
                delta = int(entry["delta"])
                if verify_sequence(certificate, target) != delta or target.to_text() != key:
                    raise ValueError("certificate cost does not match delta")
            except (DisplacementError, KeyError, TypeError, ValueError) as e:
                logger.warning("discarding corrupt cache entry %s: %s", key, e)
                self.discarded.append(key)
                continue
            self.entries[key] = {"delta": delta, "certificate": entry["certificate"]}
        return self

    def get(self, p: Partition) -> DifficultyResult | None:
        entry = self.entries.get(p.to_text())
        if entry is None:
            return None
        return DifficultyResult(
            target=p,
            delta=entry["delta"],
            certificate=parse_certificate_rows(entry["certificate"]),
            stats={"cached": True},
        )

    def put(self, result: DifficultyResult):
        """Record a result; saves to disk every save_interval new entries."""
        self.entries[result.target.to_text()] = {
            "delta": result.delta,
            "certificate": result.certificate.to_rows(),
        }
        self._pending += 1
        if self._pending >= self.save_interval:
            self.flush()

    def flush(self):
        """Write all entries to disk. Raises CacheIoError on failure."""
        data = {
            "version": CACHE_VERSION,
            "updated_at": datetime.now().isoformat(),
            "entries": self.entries,
        }
        # write beside the target, then swap it in whole
        temp_path = None
        try:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with tempfile.NamedTemporaryFile(
                "w", encoding="utf-8", dir=self.path.parent, suffix=".tmp", delete=False
            ) as f:
                temp_path = f.name
                json.dump(data, f, indent=2)
            os.replace(temp_path, self.path)
        except OSError as e:
            if temp_path is not None and os.path.exists(temp_path):
                os.unlink(temp_path)
            raise CacheIoError(f"cannot write cache {self.path}: {e}")
        self._pending = 0

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, p: Partition) -> bool:
        return p.to_text() in self.entries
