"""Synthetic graph generators: grids, a hard-for-BFS ladder, random connected.

All generators are deterministic in their seeds.  Structure is generated
first; the weight mode is applied last over the canonically sorted edge
list, so two specs that differ only in weights share a topology.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .graph import Graph, GraphError, from_edges

# The ladder construction places its designated start vertex at id 0.
ADVERSARIAL_START = 0


@dataclass(frozen=True)
class WeightSpec:
    """Uniform random integer weights in [lo, hi], seeded."""

    lo: int
    hi: int
    seed: int = 0

    def validate(self) -> None:
        if self.lo < 1 or self.hi < self.lo:
            raise GraphError(f"need 1 <= lo <= hi, got [{self.lo}, {self.hi}]")


@dataclass(frozen=True)
class GeneratorSpec:
    """What to generate.

    kind: "grid2d" (dims=(w, h)), "grid3d" (dims=(x, y, z)),
    "adversarial" (ladder=d), or "random" (n, m, seed).
    weights=None means unweighted (all weights 1).
    """

    kind: str
    dims: tuple[int, ...] = ()
    ladder: int = 0
    n: int = 0
    m: int = 0
    seed: int = 0
    weights: WeightSpec | None = None

    def validate(self) -> None:
        if self.kind == "grid2d":
            if len(self.dims) != 2 or min(self.dims) < 1:
                raise GraphError(f"grid2d needs dims (w, h) >= 1, got {self.dims}")
        elif self.kind == "grid3d":
            if len(self.dims) != 3 or min(self.dims) < 1:
                raise GraphError(f"grid3d needs dims (x, y, z) >= 1, got {self.dims}")
        elif self.kind == "adversarial":
            if self.ladder < 2:
                raise GraphError(f"adversarial needs d >= 2, got {self.ladder}")
        elif self.kind == "random":
            if self.n < 1:
                raise GraphError("random graph needs n >= 1")
            lo = max(0, self.n - 1)
            hi = self.n * (self.n - 1) // 2
            if not lo <= self.m <= hi:
                raise GraphError(f"random graph with n={self.n} needs m in [{lo}, {hi}]")
        else:
            raise GraphError(f"unknown generator kind {self.kind!r}")
        if self.weights is not None:
            self.weights.validate()


def _grid2d_edges(w: int, h: int) -> tuple[int, list[tuple[int, int]]]:
    def vid(x: int, y: int) -> int:
        return y * w + x

    edges = []
    for y in range(h):
        for x in range(w):
            if x + 1 < w:
                edges.append((vid(x, y), vid(x + 1, y)))
            if y + 1 < h:
                edges.append((vid(x, y), vid(x, y + 1)))
    return w * h, edges


def _grid3d_edges(nx: int, ny: int, nz: int) -> tuple[int, list[tuple[int, int]]]:
    def vid(x: int, y: int, z: int) -> int:
        return (z * ny + y) * nx + x

    edges = []
    for z in range(nz):
        for y in range(ny):
            for x in range(nx):
                if x + 1 < nx:
                    edges.append((vid(x, y, z), vid(x + 1, y, z)))
                if y + 1 < ny:
                    edges.append((vid(x, y, z), vid(x, y + 1, z)))
                if z + 1 < nz:
                    edges.append((vid(x, y, z), vid(x, y, z + 1)))
    return nx * ny * nz, edges


def _adversarial_edges(d: int) -> tuple[int, list[tuple[int, int]]]:
    # d columns of d vertices; consecutive columns completely joined; the
    # start vertex 0 hangs off column 1.  Any search from the start must
    # cross a d-by-d biclique, i.e. scan Theta(d^2) edges, before it can
    # settle 3d vertices.
    def col(c: int, j: int) -> int:
        return 1 + c * d + j

    edges = [(ADVERSARIAL_START, col(0, j)) for j in range(d)]
    for c in range(d - 1):
        for i in range(d):
            for j in range(d):
                edges.append((col(c, i), col(c + 1, j)))
    return d * d + 1, edges


def _random_connected_edges(n: int, m: int, seed: int) -> tuple[int, list[tuple[int, int]]]:
    rng = random.Random(seed)
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    while len(edges) < m:
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u == v:
            continue
        if u > v:
            u, v = v, u
        edges.add((u, v))
    return n, sorted(edges)


def generate(spec: GeneratorSpec) -> Graph:
    """Build the graph described by spec; deterministic in all seeds."""
    spec.validate()
    if spec.kind == "grid2d":
        n, edges = _grid2d_edges(*spec.dims)
    elif spec.kind == "grid3d":
        n, edges = _grid3d_edges(*spec.dims)
    elif spec.kind == "adversarial":
        n, edges = _adversarial_edges(spec.ladder)
    else:
        n, edges = _random_connected_edges(spec.n, spec.m, spec.seed)

    canonical = sorted((u, v) if u < v else (v, u) for u, v in edges)
    if spec.weights is None:
        triples = [(u, v, 1) for u, v in canonical]
    else:
        wrng = random.Random(spec.weights.seed)
        triples = [(u, v, wrng.randint(spec.weights.lo, spec.weights.hi)) for u, v in canonical]
    return from_edges(n, triples)
