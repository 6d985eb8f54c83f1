"""On-disk results store keyed by (graph hash, parameter).

Values are JSON documents in a small SQLite table, so repeated table and
suite runs only pay for entries they have not seen before.
"""

from __future__ import annotations

import json
import os
import sqlite3
from pathlib import Path
from typing import Any, Callable

from .graph import Graph, graph_hash

CACHE_ENV = "PDTHROTTLE_CACHE"


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "pdthrottle"


class ResultsStore:
    """Persistent map (graph hash, parameter) -> JSON value.

    ``solver_calls`` counts cache misses in this process; a rerun over
    cached inputs leaves it at zero.
    """

    def __init__(self, directory: str | Path | None = None, commit_every: int = 256):
        self.directory = Path(directory) if directory is not None else default_cache_dir()
        self.directory.mkdir(parents=True, exist_ok=True)
        self.path = self.directory / "results.sqlite"
        self._db = sqlite3.connect(self.path, timeout=60)
        self._db.execute(
            "CREATE TABLE IF NOT EXISTS results ("
            " graph TEXT NOT NULL, param TEXT NOT NULL, value TEXT NOT NULL,"
            " PRIMARY KEY (graph, param))"
        )
        self._db.commit()
        self._pending = 0
        self._commit_every = commit_every
        self.solver_calls = 0
        self.hits = 0

    def get(self, key: str, param: str) -> Any | None:
        row = self._db.execute(
            "SELECT value FROM results WHERE graph = ? AND param = ?", (key, param)
        ).fetchone()
        return None if row is None else json.loads(row[0])

    def put(self, key: str, param: str, value: Any) -> None:
        self._db.execute(
            "INSERT OR REPLACE INTO results (graph, param, value) VALUES (?, ?, ?)",
            (key, param, json.dumps(value, sort_keys=True)),
        )
        self._pending += 1
        if self._pending >= self._commit_every:
            self.flush()

    def fetch(self, G: Graph, param: str, compute: Callable[[], Any]) -> Any:
        key = graph_hash(G)
        hit = self.get(key, param)
        if hit is not None:
            self.hits += 1
            return hit
        self.solver_calls += 1
        value = compute()
        self.put(key, param, value)
        return value

    def flush(self) -> None:
        self._db.commit()
        self._pending = 0

    def close(self) -> None:
        self.flush()
        self._db.close()

    def __enter__(self) -> ResultsStore:
        return self

    def __exit__(self, *exc) -> None:
        self.close()
