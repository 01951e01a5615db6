"""Ball construction and shortcut insertion.

The pipeline per vertex v: a truncated Dijkstra finds the nearest-rho
neighborhood (the ball) and its radius; a minimum-hop shortest-path tree is
laid over the ball; a heuristic picks edges from v into the tree so that
every ball member sits within k hops.  Shortcut weights are exact ball
distances, so augmentation never changes any shortest-path distance.

Ball counting includes the center: the first "closest vertex" of v is v
itself at distance 0, so rho=1 always yields the trivial ball {v} with
radius 0 and adds nothing.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass

import numpy as np

from .baselines import SMALL_GRAPH_CAP, dijkstra, k_radius_bruteforce
from .graph import UNREACHED, Graph, GraphError, from_edges


@dataclass(frozen=True)
class Ball:
    """The nearest-rho neighborhood of a vertex.

    members are (vertex, distance) pairs sorted by (distance, vertex id);
    the center is first with distance 0.  r_rho is the largest member
    distance.  In tie-inclusive mode every vertex at distance <= r_rho is a
    member; in strict mode exactly rho members are kept, ties broken by id.
    """

    center: int
    members: tuple[tuple[int, int], ...]
    r_rho: int

    def member_set(self) -> dict[int, int]:
        return dict(self.members)


def _edge_budget(ws: np.ndarray, rho: int) -> int:
    # Lightest rho edges, extended through ties with the rho-th weight.
    # The extension matters for tie-inclusive closure: with exactly rho
    # edges a vertex whose rho-th and (rho+1)-th edges tie could miss a
    # member at distance r_rho.
    deg = len(ws)
    if deg <= rho:
        return deg
    j = rho
    pivot = ws[rho - 1]
    while j < deg and ws[j] == pivot:
        j += 1
    return j


def compute_ball(g: Graph, v: int, rho: int, tie_inclusive: bool = True) -> Ball:
    """Truncated Dijkstra from v scanning only each vertex's lightest edges.

    Settles until rho vertices (counting v) are in; tie-inclusive mode keeps
    going while further vertices sit at exactly r_rho.  A component smaller
    than rho yields the whole component with r_rho its eccentricity from v.
    """
    if rho < 1:
        raise GraphError(f"rho must be >= 1, got {rho}")
    if not 0 <= v < g.n:
        raise GraphError(f"vertex {v} out of range for n={g.n}")
    best = {v: 0}
    members: list[tuple[int, int]] = []
    heap = [(0, v)]
    r_rho = 0
    while heap:
        d, u = heapq.heappop(heap)
        if d != best.get(u):
            continue
        if len(members) >= rho and (not tie_inclusive or d > r_rho):
            break
        members.append((u, d))
        if len(members) <= rho:
            r_rho = d  # running eccentricity until the rho-th settle pins it
        if len(members) < rho:
            ns, ws = g.neighbors(u)
            for i in range(_edge_budget(ws, rho)):
                w = int(ns[i])
                nd = d + int(ws[i])
                if nd < best.get(w, UNREACHED):
                    best[w] = nd
                    heapq.heappush(heap, (nd, w))
    return Ball(center=v, members=tuple(members), r_rho=r_rho)


@dataclass(frozen=True)
class RadiusAssignment:
    """Per-vertex step radii plus the (rho, k) they were built for."""

    r: np.ndarray
    rho: int
    k: int
    tie_inclusive: bool = True

    @classmethod
    def uniform(cls, n: int, value: int, rho: int = 0, k: int = 0) -> "RadiusAssignment":
        arr = np.full(n, value, dtype=np.int64)
        arr.flags.writeable = False
        return cls(r=arr, rho=rho, k=k)


def write_radii(radii: RadiusAssignment, labels: tuple[int, ...] | None = None) -> str:
    """One "v r\\n" line per vertex, keyed by label (sorted), "inf" for no cap."""
    rows = []
    for v, r in enumerate(radii.r.tolist()):
        lab = labels[v] if labels is not None else v
        rows.append((lab, "inf" if r >= UNREACHED else str(r)))
    rows.sort()
    return "".join(f"{lab} {r}\n" for lab, r in rows)


def parse_radii(text: str) -> dict[int, int]:
    pairs: dict[int, int] = {}
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r").strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"radii line {lineno}: expected 'v r'")
        v = int(parts[0])
        r = UNREACHED if parts[1] == "inf" else int(parts[1])
        if r < 0:
            raise GraphError(f"radii line {lineno}: radius must be >= 0")
        pairs[v] = r
    if not pairs:
        raise GraphError("empty radii file")
    return pairs


def radii_for_graph(pairs: dict[int, int], g: Graph) -> np.ndarray:
    """Align parsed (label, radius) pairs to a graph's dense vertex ids."""
    arr = np.empty(g.n, dtype=np.int64)
    for v in range(g.n):
        lab = g.label_of(v)
        if lab not in pairs:
            raise GraphError(f"radii file is missing vertex {lab}")
        arr[v] = pairs[lab]
    if len(pairs) != g.n:
        raise GraphError(f"radii file covers {len(pairs)} vertices, graph has {g.n}")
    arr.flags.writeable = False
    return arr


@dataclass(frozen=True)
class BallTree:
    """Shortest-path tree over a ball with minimal per-member hop counts.

    parent maps each non-root member to its tree parent; depth is the hop
    count from the root (minimal over all shortest-path trees); dist is the
    exact ball distance.
    """

    root: int
    parent: dict[int, int]
    depth: dict[int, int]
    dist: dict[int, int]

    def children(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {u: [] for u in self.depth}
        for u, p in self.parent.items():
            out[p].append(u)
        for kids in out.values():
            kids.sort()
        return out


def min_hop_ball_tree(ball: Ball, g: Graph) -> BallTree:
    """Assign each member the fewest hops over shortest paths from the center.

    Members arrive sorted by distance, and every shortest path to a member
    stays inside the ball, so a single pass suffices: the parent of u is the
    member w minimizing (depth(w), w) among those with dist(w) + w(w,u) ==
    dist(u).
    """
    dist = ball.member_set()
    depth: dict[int, int] = {ball.center: 0}
    parent: dict[int, int] = {}
    for u, d in ball.members:
        if u == ball.center:
            continue
        best: tuple[int, int] | None = None
        ns, ws = g.neighbors(u)
        for w, wt in zip(ns.tolist(), ws.tolist()):
            dw = dist.get(w)
            if dw is None or dw + wt != d:
                continue
            cand = (depth[w], w)
            if best is None or cand < best:
                best = cand
        if best is None:
            raise GraphError(f"ball of {ball.center} has no tree predecessor for {u}")
        depth[u] = best[0] + 1
        parent[u] = best[1]
    return BallTree(root=ball.center, parent=parent, depth=depth, dist=dist)


@dataclass(frozen=True)
class ShortcutPlan:
    """Edges to add from one source so its ball fits within k hops."""

    source: int
    added_edges: tuple[tuple[int, int], ...]  # (target, weight = ball distance)
    heuristic: str


def shortcut_greedy(tree: BallTree, k: int) -> ShortcutPlan:
    """Shortcut to every member at hop depth k+1, 2k+1, 3k+1, ..."""
    if k < 1:
        raise GraphError(f"k must be >= 1, got {k}")
    targets = sorted(u for u, dep in tree.depth.items() if dep > k and (dep - 1) % k == 0)
    edges = tuple((u, tree.dist[u]) for u in targets)
    return ShortcutPlan(source=tree.root, added_edges=edges, heuristic="greedy")


def shortcut_dp(tree: BallTree, k: int) -> ShortcutPlan:
    """Fewest root shortcuts bringing every tree member within k hops.

    cost(u, t) is the number of edges added inside u's subtree when u's
    parent ends up t hops from the root: at t == k a shortcut to u is
    forced (children restart at 1); below k it is the cheaper of
    shortcutting u or letting the subtree ride at t+1.  Ties prefer the
    shortcut branch, which leaves the count unchanged.
    """
    if k < 1:
        raise GraphError(f"k must be >= 1, got {k}")
    kids = tree.children()
    order = [u for u, _ in sorted(((u, d) for u, d in tree.dist.items()), key=lambda p: (p[1], p[0]))]
    cost: dict[int, list[int]] = {}
    shortcut_cost: dict[int, int] = {}
    for u in reversed(order):
        if u == tree.root:
            continue
        sc = 1 + sum(cost[w][1] for w in kids[u])
        row = [0] * (k + 1)
        row[k] = sc
        for t in range(k - 1, -1, -1):
            stay = sum(cost[w][t + 1] for w in kids[u])
            row[t] = sc if sc <= stay else stay
        cost[u] = row
        shortcut_cost[u] = sc
    targets: list[int] = []
    stack = [(u, 0) for u in reversed(kids[tree.root])]
    while stack:
        u, t = stack.pop()
        stay = sum(cost[w][t + 1] for w in kids[u]) if t < k else None
        if t == k or shortcut_cost[u] <= stay:
            targets.append(u)
            nt = 1
        else:
            nt = t + 1
        stack.extend((w, nt) for w in reversed(kids[u]))
    targets.sort()
    edges = tuple((u, tree.dist[u]) for u in targets)
    return ShortcutPlan(source=tree.root, added_edges=edges, heuristic="dp")


def _half_edges(g: Graph) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    src = np.repeat(np.arange(g.n, dtype=np.int64), np.diff(g.indptr))
    mask = src < g.nbr
    return src[mask], g.nbr[mask], g.wt[mask]


def _augment(g: Graph, extra: list[tuple[int, int, int]]) -> Graph:
    ou, ov, ow = _half_edges(g)
    if extra:
        arr = np.asarray(extra, dtype=np.int64)
        ou = np.concatenate([ou, arr[:, 0]])
        ov = np.concatenate([ov, arr[:, 1]])
        ow = np.concatenate([ow, arr[:, 2]])
    return from_edges(g.n, (ou, ov, ow), labels=g.labels)


def build_1_rho(g: Graph, rho: int, tie_inclusive: bool = True) -> tuple[Graph, RadiusAssignment]:
    """Add direct edges from every vertex to its ball members.

    A member already joined by an equally light edge is skipped; a heavier
    existing edge is collapsed down to the exact distance.  r(v) = r_rho(v).
    """
    r = np.zeros(g.n, dtype=np.int64)
    extra: list[tuple[int, int, int]] = []
    for v in range(g.n):
        ball = compute_ball(g, v, rho, tie_inclusive)
        r[v] = ball.r_rho
        if len(ball.members) <= 1:
            continue
        ns, ws = g.neighbors(v)
        direct = dict(zip(ns.tolist(), ws.tolist()))
        for u, d in ball.members:
            if u == v or direct.get(u) == d:
                continue
            extra.append((v, u, d))
    r.flags.writeable = False
    aug = _augment(g, extra)
    return aug, RadiusAssignment(r=r, rho=rho, k=1, tie_inclusive=tie_inclusive)


def build_k_rho(
    g: Graph,
    k: int,
    rho: int,
    heuristic: str = "dp",
    tie_inclusive: bool = True,
) -> tuple[Graph, RadiusAssignment, int]:
    """Per-vertex ball -> min-hop tree -> shortcut plan, unioned into g.

    Returns the augmented graph, the radius assignment r(v) = r_rho(v), and
    the number of undirected edges the union actually added.
    """
    if heuristic not in ("greedy", "dp"):
        raise GraphError(f"unknown heuristic {heuristic!r}")
    if k < 1:
        raise GraphError(f"k must be >= 1, got {k}")
    pick = shortcut_greedy if heuristic == "greedy" else shortcut_dp
    r = np.zeros(g.n, dtype=np.int64)
    extra: list[tuple[int, int, int]] = []
    for v in range(g.n):
        ball = compute_ball(g, v, rho, tie_inclusive)
        r[v] = ball.r_rho
        if len(ball.members) <= 1:
            continue
        tree = min_hop_ball_tree(ball, g)
        plan = pick(tree, k)
        extra.extend((v, u, w) for u, w in plan.added_edges)
    r.flags.writeable = False
    aug = _augment(g, extra)
    radii = RadiusAssignment(r=r, rho=rho, k=k, tie_inclusive=tie_inclusive)
    return aug, radii, aug.m - g.m


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the brute-force ball-property check."""

    rho: int
    k: int
    checked: int
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def validate_k_rho(g: Graph, radii: RadiusAssignment, cap: int = SMALL_GRAPH_CAP) -> ValidationReport:
    """Check r(v) <= k-radius(v) and |B(v, r(v))| >= min(rho, component size).

    Uses the brute-force k-radius and full Dijkstra oracles, so g must be at
    most cap vertices.
    """
    rbar = k_radius_bruteforce(g, radii.k, cap=cap)
    violations: list[str] = []
    for v in range(g.n):
        rv = int(radii.r[v])
        if rv > int(rbar[v]):
            violations.append(f"vertex {v}: r={rv} exceeds k-radius {int(rbar[v])}")
        dv = dijkstra(g, v)
        comp = dv.reached_count()
        ball_size = int((dv.dist <= rv).sum())
        need = min(radii.rho, comp)
        if ball_size < need:
            violations.append(f"vertex {v}: |B(v,{rv})|={ball_size} below {need}")
    return ValidationReport(rho=radii.rho, k=radii.k, checked=g.n, violations=tuple(violations))
