"""Resource residency: bounded LRU cache and persisted saved searches.

The cache is thread-safe and single-flight: concurrent misses for one key
run the loader exactly once, with every waiter receiving the result (or
the loader's exception).  Loaders run outside the lock so slow loads never
block hits on other keys.
"""

from __future__ import annotations

import json
import threading
import time
from collections import OrderedDict
from concurrent.futures import Future
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable

SEARCH_FILE_MAGIC = "parcour-saved-searches"
SEARCH_FILE_VERSION = 1


class DuplicateName(Exception):
    pass


class NotFound(Exception):
    pass


class LruCache:
    """Least-recently-used cache with single-flight loading.

    misses == number of loader invocations; joining an in-flight load
    counts as a hit.  A failed load caches nothing and re-raises for every
    waiter.
    """

    def __init__(self, capacity: int):
        if capacity < 1:
            raise ValueError(f"capacity must be >= 1: {capacity}")
        self.capacity = capacity
        self.hits = 0
        self.misses = 0
        self._entries: OrderedDict[Any, Any] = OrderedDict()
        self._flights: dict[Any, Future] = {}
        self._lock = threading.Lock()

    def get_or_load(self, key, loader: Callable[[], Any]):
        with self._lock:
            if key in self._entries:
                self._entries.move_to_end(key)
                self.hits += 1
                return self._entries[key]
            flight = self._flights.get(key)
            if flight is not None:
                self.hits += 1
                join = True
            else:
                flight = Future()
                self._flights[key] = flight
                self.misses += 1
                join = False
        if join:
            return flight.result()
        try:
            value = loader()
        except BaseException as exc:
            with self._lock:
                del self._flights[key]
            flight.set_exception(exc)
            raise
        with self._lock:
            del self._flights[key]
            self._entries[key] = value
            while len(self._entries) > self.capacity:
                self._entries.popitem(last=False)
        flight.set_result(value)
        return value

    def keys_lru_to_mru(self) -> list:
        with self._lock:
            return list(self._entries)

    def __contains__(self, key) -> bool:
        with self._lock:
            return key in self._entries

    def __len__(self) -> int:
        with self._lock:
            return len(self._entries)


@dataclass(frozen=True)
class SavedSearch:
    name: str
    query: str
    target_languages: tuple[str, ...] = ()
    view_state: Any = None
    created_at: float = field(default_factory=time.time)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "query": self.query,
            "target_languages": list(self.target_languages),
            "view_state": self.view_state,
            "created_at": self.created_at,
        }

    @classmethod
    def from_json(cls, doc: dict) -> "SavedSearch":
        return cls(
            name=doc["name"],
            query=doc["query"],
            target_languages=tuple(doc.get("target_languages", [])),
            view_state=doc.get("view_state"),
            created_at=doc["created_at"],
        )


class SavedSearchStore:
    """Named searches persisted to one JSON file, written on every change."""

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._searches: dict[str, SavedSearch] = {}
        self._lock = threading.Lock()
        if self.path.exists():
            doc = json.loads(self.path.read_text(encoding="utf-8"))
            if doc.get("magic") != SEARCH_FILE_MAGIC:
                raise ValueError(f"not a saved-search file: {self.path}")
            if doc.get("version") != SEARCH_FILE_VERSION:
                raise ValueError(f"unsupported saved-search version in {self.path}")
            for item in doc["searches"]:
                search = SavedSearch.from_json(item)
                self._searches[search.name] = search

    def _persist(self) -> None:
        self.path.parent.mkdir(parents=True, exist_ok=True)
        doc = {
            "magic": SEARCH_FILE_MAGIC,
            "version": SEARCH_FILE_VERSION,
            "searches": [s.to_json() for s in self._searches.values()],
        }
        tmp = self.path.with_name(self.path.name + ".tmp")
        tmp.write_text(json.dumps(doc, ensure_ascii=False, indent=1), encoding="utf-8")
        tmp.replace(self.path)

    def create(self, search: SavedSearch) -> SavedSearch:
        with self._lock:
            if search.name in self._searches:
                raise DuplicateName(f"saved search {search.name!r} already exists")
            self._searches[search.name] = search
            self._persist()
            return search

    def list(self) -> list[SavedSearch]:
        with self._lock:
            return sorted(
                self._searches.values(), key=lambda s: (-s.created_at, s.name)
            )

    def get(self, name: str) -> SavedSearch:
        with self._lock:
            if name not in self._searches:
                raise NotFound(f"no saved search named {name!r}")
            return self._searches[name]

    def delete(self, name: str) -> bool:
        """Idempotent; returns whether the name existed."""
        with self._lock:
            existed = self._searches.pop(name, None) is not None
            if existed:
                self._persist()
            return existed
