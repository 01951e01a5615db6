"""Sequential reference algorithms: the correctness oracles everything else
is tested against.

All functions are pure in (graph, arguments) and deterministic.  Distances
are exact integers; dijkstra, bellman_ford and delta_stepping must agree
bit-for-bit on every input.
"""
from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass

import numpy as np

from .graph import UNREACHED, Graph, GraphError

# Brute-force helpers refuse graphs above this size unless overridden.
SMALL_GRAPH_CAP = 400


class SizeCapError(ValueError):
    """Brute-force oracle invoked on a graph above its size cap."""


@dataclass(frozen=True)
class DistanceVector:
    """Per-vertex distances from a source; UNREACHED marks no path."""

    source: int
    dist: np.ndarray

    def __getitem__(self, v: int) -> int:
        return int(self.dist[v])

    def reached_count(self) -> int:
        return int((self.dist < UNREACHED).sum())

    def same_as(self, other: "DistanceVector") -> bool:
        return self.source == other.source and np.array_equal(self.dist, other.dist)


def _check_source(g: Graph, s: int) -> None:
    if not 0 <= s < g.n:
        raise GraphError(f"source {s} out of range for n={g.n}")


def dijkstra(g: Graph, s: int) -> DistanceVector:
    """Binary-heap Dijkstra; the oracle for every other distance computation."""
    _check_source(g, s)
    dist = np.full(g.n, UNREACHED, dtype=np.int64)
    dist[s] = 0
    heap = [(0, s)]
    while heap:
        d, u = heapq.heappop(heap)
        if d != dist[u]:
            continue
        ns, ws = g.neighbors(u)
        for v, w in zip(ns.tolist(), ws.tolist()):
            nd = d + w
            if nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    dist.flags.writeable = False
    return DistanceVector(source=s, dist=dist)


def bellman_ford(g: Graph, s: int) -> DistanceVector:
    """Full relaxation passes until fixpoint; agrees exactly with dijkstra."""
    _check_source(g, s)
    dist = np.full(g.n, UNREACHED, dtype=np.int64)
    dist[s] = 0
    src = np.repeat(np.arange(g.n, dtype=np.int64), np.diff(g.indptr))
    dst = g.nbr
    w = g.wt
    while True:
        finite = dist[src] < UNREACHED
        if not finite.any():
            break
        cand = dist[src[finite]] + w[finite]
        targets = dst[finite]
        before = dist.copy()
        np.minimum.at(dist, targets, cand)
        if np.array_equal(before, dist):
            break
    dist.flags.writeable = False
    return DistanceVector(source=s, dist=dist)


@dataclass(frozen=True)
class BfsResult:
    dist: DistanceVector  # hop units
    rounds: int  # eccentricity of the source within its component


def bfs(g: Graph, s: int) -> BfsResult:
    _check_source(g, s)
    dist = np.full(g.n, UNREACHED, dtype=np.int64)
    dist[s] = 0
    q = deque([s])
    rounds = 0
    while q:
        u = q.popleft()
        du = int(dist[u])
        ns, _ = g.neighbors(u)
        for v in ns.tolist():
            if dist[v] == UNREACHED:
                dist[v] = du + 1
                rounds = max(rounds, du + 1)
                q.append(v)
    dist.flags.writeable = False
    return BfsResult(dist=DistanceVector(source=s, dist=dist), rounds=rounds)


def bfs_settle_scans(g: Graph, s: int) -> list[int]:
    """Cumulative adjacency entries scanned when each vertex settles.

    Entry j is the number of edge scans performed by BFS up to the moment
    the (j+1)-th vertex got its distance (the source settles at 0 scans).
    """
    _check_source(g, s)
    seen = np.zeros(g.n, dtype=bool)
    seen[s] = True
    scans = 0
    profile = [0]
    q = deque([s])
    while q:
        u = q.popleft()
        ns, _ = g.neighbors(u)
        for v in ns.tolist():
            scans += 1
            if not seen[v]:
                seen[v] = True
                profile.append(scans)
                q.append(v)
    return profile


@dataclass(frozen=True)
class DeltaSteppingRun:
    dist: DistanceVector
    steps: int  # buckets processed
    substeps: int  # relaxation passes across all buckets


def delta_stepping(g: Graph, s: int, delta: int) -> DeltaSteppingRun:
    """Fixed-width bucket SSSP.

    One step processes the lowest nonempty bucket [j*delta, (j+1)*delta);
    inside it, relaxation passes over the bucket's members repeat until no
    tentative distance lands in the bucket anymore.  Each pass reads the
    distances as of the pass start and combines updates by min, so the pass
    outcome is independent of edge order.
    """
    _check_source(g, s)
    if delta < 1:
        raise GraphError(f"delta must be >= 1, got {delta}")
    dist = [UNREACHED] * g.n
    dist[s] = 0
    settled = [False] * g.n
    buckets: dict[int, set[int]] = {0: {s}}
    steps = 0
    substeps = 0
    while buckets:
        j = min(buckets)
        hi = (j + 1) * delta
        active = {v for v in buckets.pop(j) if not settled[v]}
        if not active:
            continue
        steps += 1
        frontier = set(active)
        while frontier:
            substeps += 1
            updates: dict[int, int] = {}
            for u in frontier:
                du = dist[u]
                ns, ws = g.neighbors(u)
                for v, w in zip(ns.tolist(), ws.tolist()):
                    nd = du + w
                    if nd < dist[v] and nd < updates.get(v, UNREACHED):
                        updates[v] = nd
            frontier = set()
            for v, nd in updates.items():
                if nd >= dist[v]:
                    continue
                dist[v] = nd
                if nd < hi:
                    active.add(v)
                    frontier.add(v)
                else:
                    buckets.setdefault(nd // delta, set()).add(v)
        for v in active:
            settled[v] = True
    arr = np.asarray(dist, dtype=np.int64)
    arr.flags.writeable = False
    return DeltaSteppingRun(dist=DistanceVector(source=s, dist=arr), steps=steps, substeps=substeps)


def _lex_dijkstra(g: Graph, s: int) -> tuple[list[int], list[int]]:
    """Distances plus the fewest hop count among minimum-weight paths."""
    dist = [UNREACHED] * g.n
    hops = [UNREACHED] * g.n
    dist[s] = 0
    hops[s] = 0
    heap = [(0, 0, s)]
    while heap:
        d, h, u = heapq.heappop(heap)
        if (d, h) != (dist[u], hops[u]):
            continue
        ns, ws = g.neighbors(u)
        for v, w in zip(ns.tolist(), ws.tolist()):
            nd, nh = d + w, h + 1
            if (nd, nh) < (dist[v], hops[v]):
                dist[v], hops[v] = nd, nh
                heapq.heappush(heap, (nd, nh, v))
    return dist, hops


def _check_cap(g: Graph, cap: int) -> None:
    if g.n > cap:
        raise SizeCapError(f"graph has {g.n} vertices, brute-force cap is {cap}")


@dataclass(frozen=True)
class HopMatrix:
    """Pairwise hop distances: edges on the min-weight path with fewest edges."""

    hops: np.ndarray

    def __getitem__(self, pair: tuple[int, int]) -> int:
        return int(self.hops[pair])


def hop_matrix(g: Graph, cap: int = SMALL_GRAPH_CAP) -> HopMatrix:
    _check_cap(g, cap)
    out = np.full((g.n, g.n), UNREACHED, dtype=np.int64)
    for u in range(g.n):
        _, hops = _lex_dijkstra(g, u)
        out[u] = hops
    out.flags.writeable = False
    return HopMatrix(hops=out)


def k_radius_bruteforce(g: Graph, k: int, cap: int = SMALL_GRAPH_CAP) -> np.ndarray:
    """Exact per-vertex closest distance among vertices more than k hops away.

    UNREACHED where every other vertex is within k hops.
    """
    _check_cap(g, cap)
    if k < 1:
        raise GraphError(f"k must be >= 1, got {k}")
    out = np.full(g.n, UNREACHED, dtype=np.int64)
    for u in range(g.n):
        dist, hops = _lex_dijkstra(g, u)
        best = UNREACHED
        for v in range(g.n):
            if hops[v] > k and dist[v] < best:
                best = dist[v]
        out[u] = best
    out.flags.writeable = False
    return out
