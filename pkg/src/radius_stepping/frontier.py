"""Ordered vertex maps backing the fast engine's frontier.

Each map keeps (key, vertex) pairs ordered by key with vertex id breaking
ties, and supports minimum, split-below-a-key, remove and upsert.  The
implementation is a lazy-deletion binary heap over the live-key dict: a
heap entry is live iff it matches the dict, everything else is skipped on
the way down.  Remove on an absent vertex is a no-op and upsert inserts,
which is exactly what the engine's relaxation protocol needs.
"""
from __future__ import annotations

import heapq


class MinOrderedMap:
    """vertex -> integer key, ordered by (key, vertex)."""

    __slots__ = ("_heap", "_key")

    def __init__(self) -> None:
        self._heap: list[tuple[int, int]] = []
        self._key: dict[int, int] = {}

    def __len__(self) -> int:
        return len(self._key)

    def __contains__(self, v: int) -> bool:
        return v in self._key

    def key_of(self, v: int) -> int | None:
        return self._key.get(v)

    def vertices(self) -> set[int]:
        return set(self._key)

    def upsert(self, v: int, key: int) -> None:
        self._key[v] = key
        heapq.heappush(self._heap, (key, v))

    def remove(self, v: int) -> None:
        self._key.pop(v, None)

    def _settle_top(self) -> None:
        heap = self._heap
        key = self._key
        while heap:
            k, v = heap[0]
            if key.get(v) == k:
                return
            heapq.heappop(heap)

    def min_item(self) -> tuple[int, int] | None:
        """(key, vertex) with the smallest (key, vertex), or None if empty."""
        if not self._key:
            return None
        self._settle_top()
        return self._heap[0]

    def split_leq(self, bound: int) -> list[int]:
        """Remove and return all vertices with key <= bound, in (key, id) order."""
        out: list[int] = []
        heap = self._heap
        key = self._key
        while heap:
            k, v = heap[0]
            if key.get(v) != k:
                heapq.heappop(heap)
                continue
            if k > bound:
                break
            heapq.heappop(heap)
            del key[v]
            out.append(v)
        return out


class FrontierIndex:
    """The paired maps Q (key delta) and R (key delta + radius).

    Both always index the same touched-but-unsettled vertex set; the engine
    reads step distances off R and splits the step's active set off Q.
    """

    __slots__ = ("q", "r")

    def __init__(self) -> None:
        self.q = MinOrderedMap()
        self.r = MinOrderedMap()

    def __len__(self) -> int:
        return len(self.q)

    def upsert(self, v: int, dist: int, radius: int) -> None:
        self.q.upsert(v, dist)
        self.r.upsert(v, dist + radius)

    def remove(self, v: int) -> None:
        self.q.remove(v)
        self.r.remove(v)

    def assert_synchronized(self) -> None:
        if self.q.vertices() != self.r.vertices():
            raise AssertionError("frontier maps diverged")
