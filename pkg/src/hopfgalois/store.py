"""Append-only results store and the automorphism cache.

Records go to a line-delimited JSON file (one self-describing object per
line, schema-versioned) so runs can be grepped and replayed.  Computed
automorphism groups are cached in a sidecar JSON file keyed by canonical
spec text plus engine version; a cache hit must reproduce the computation
bit for bit, which the tests enforce.
"""

from __future__ import annotations

import json
import os
from pathlib import Path

SCHEMA_VERSION = "1"
ENGINE_VERSION = "0.1.0"


class AutCache:
    def __init__(self, path: Path):
        self.path = Path(path)
        self._data = {}
        if self.path.exists():
            with open(self.path, "r", encoding="utf-8") as fh:
                self._data = json.load(fh)

    def _key(self, spec_text: str) -> str:
        return f"{ENGINE_VERSION}:{spec_text}"

    def get(self, spec_text: str):
        return self._data.get(self._key(spec_text))

    def put(self, spec_text: str, perms):
        self._data[self._key(spec_text)] = perms
        tmp = self.path.with_name(self.path.name + ".tmp")
        with open(tmp, "w", encoding="utf-8") as fh:
            json.dump(self._data, fh, sort_keys=True)
        os.replace(tmp, self.path)


class ResultsStore:
    """One JSONL record per command run, plus the automorphism cache."""

    def __init__(self, path):
        self.path = Path(path)
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self.aut_cache = AutCache(Path(str(path) + ".autcache.json"))

    def record(self, command: str, inputs: dict, outcome: dict, elapsed_ms: int):
        entry = {
            "schema_version": SCHEMA_VERSION,
            "engine_version": ENGINE_VERSION,
            "command": command,
            "inputs": inputs,
            "outcome": outcome,
            "elapsed_ms": elapsed_ms,
        }
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(json.dumps(entry, sort_keys=True) + "\n")

    def records(self) -> list:
        if not self.path.exists():
            return []
        out = []
        with open(self.path, "r", encoding="utf-8") as fh:
            for line in fh:
                line = line.strip()
                if line:
                    out.append(json.loads(line))
        return out
