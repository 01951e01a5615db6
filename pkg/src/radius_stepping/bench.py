"""Experiment harness: sweep (k, rho, heuristic) over a graph, aggregate
step counts from a shared sample of sources, and emit CSV.

Weighted graphs run the ordered-map engine on the augmented graph;
unit-weight graphs run the frontier engine on the original graph (its
radii come from the same ball construction, and the rho=1 baseline then
degenerates to plain BFS rounds).  Added-edge factors are reported for
both.  Everything is deterministic in the config seed: equal configs
produce byte-identical CSV.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .baselines import SMALL_GRAPH_CAP
from .engine import check_bounds, radius_step_fast, radius_step_unweighted
from .generate import GeneratorSpec, WeightSpec, generate
from .graph import Graph, GraphError, parse_edge_list
from .preprocess import build_k_rho, validate_k_rho

CSV_HEADER = "graph,n,m,k,rho,heuristic,added_edge_factor,mean_steps,mean_substeps,reduction_factor"


class BenchError(RuntimeError):
    """A harness-level failure: validation or bound check did not pass."""


@dataclass(frozen=True)
class ExperimentConfig:
    """One benchmark: a graph, the (k, rho, heuristic) grid, and sampling."""

    label: str
    rhos: tuple[int, ...]
    ks: tuple[int, ...] = (1,)
    heuristics: tuple[str, ...] = ("dp",)
    source_count: int = 20
    seed: int = 0
    graph_path: str | None = None
    generator: GeneratorSpec | None = None

    def validate(self) -> None:
        if (self.graph_path is None) == (self.generator is None):
            raise GraphError("config needs exactly one of graph_path or generator")
        if not self.rhos or min(self.rhos) < 1:
            raise GraphError("rhos must be a nonempty list of positive counts")
        if not self.ks or min(self.ks) < 1:
            raise GraphError("ks must be a nonempty list of positive counts")
        if not self.heuristics or any(h not in ("dp", "greedy") for h in self.heuristics):
            raise GraphError("heuristics must come from {dp, greedy}")
        if self.source_count < 1:
            raise GraphError("source_count must be >= 1")


def config_from_json(text: str) -> ExperimentConfig:
    raw = json.loads(text)
    gen = None
    if "generator" in raw:
        graw = dict(raw["generator"])
        wraw = graw.pop("weights", None)
        weights = WeightSpec(**wraw) if wraw else None
        graw["dims"] = tuple(graw.get("dims", ()))
        gen = GeneratorSpec(weights=weights, **graw)
    return ExperimentConfig(
        label=raw["label"],
        rhos=tuple(raw["rhos"]),
        ks=tuple(raw.get("ks", [1])),
        heuristics=tuple(raw.get("heuristics", ["dp"])),
        source_count=raw.get("source_count", 20),
        seed=raw.get("seed", 0),
        graph_path=raw.get("graph_path"),
        generator=gen,
    )


@dataclass(frozen=True)
class ExperimentRow:
    graph: str
    n: int
    m: int
    k: int
    rho: int
    heuristic: str
    added_edge_factor: float
    mean_steps: float
    mean_substeps: float
    reduction_factor: float


@dataclass(frozen=True)
class _CellStats:
    added: int
    mean_steps: float
    mean_substeps: float


def _load_graph(cfg: ExperimentConfig) -> Graph:
    if cfg.generator is not None:
        return generate(cfg.generator)
    with open(cfg.graph_path, "r", encoding="ascii") as fh:
        return parse_edge_list(fh.read())


def _run_cell(g: Graph, k: int, rho: int, heuristic: str, sources: list[int]) -> _CellStats:
    aug, radii, added = build_k_rho(g, k, rho, heuristic=heuristic)
    if g.n <= SMALL_GRAPH_CAP:
        report = validate_k_rho(aug, radii)
        if not report.ok:
            raise BenchError(
                f"(k={k}, rho={rho}, {heuristic}) failed validation: {report.violations[:3]}"
            )
    unit = g.is_unit_weight
    steps = 0
    substeps = 0
    for s in sources:
        if unit:
            res = radius_step_unweighted(g, radii, s)
            bounds = check_bounds(res, g, rho, k=None, radii=radii, assume_premise=True)
        else:
            res = radius_step_fast(aug, radii, s)
            bounds = check_bounds(res, aug, rho, k=k, radii=radii, assume_premise=True)
        if not bounds.ok:
            raise BenchError(
                f"(k={k}, rho={rho}, {heuristic}, s={s}) bound check: {bounds.violations[:3]}"
            )
        steps += res.step_count
        substeps += res.total_substeps()
    return _CellStats(
        added=added,
        mean_steps=steps / len(sources),
        mean_substeps=substeps / len(sources),
    )


def run_experiment(cfg: ExperimentConfig) -> list[ExperimentRow]:
    """Preprocess once per cell, run the engine from shared seeded sources.

    The rho=1 cell (computed even when absent from the sweep) is the
    reduction baseline; its augmentation is empty, so it is shared across
    k and heuristic.
    """
    cfg.validate()
    g = _load_graph(cfg)
    rng = random.Random(cfg.seed)
    sources = sorted(rng.sample(range(g.n), min(cfg.source_count, g.n)))

    cache: dict[tuple[int, int, str], _CellStats] = {}

    def cell(k: int, rho: int, heuristic: str) -> _CellStats:
        key = (1, 1, "dp") if rho == 1 else (k, rho, heuristic)
        if key not in cache:
            cache[key] = _run_cell(g, key[0], key[1], key[2], sources)
        return cache[key]

    def reduction(baseline_steps: float, steps: float) -> float:
        # zero steps only on degenerate single-vertex runs
        return baseline_steps / steps if steps else 1.0

    baseline = cell(1, 1, "dp").mean_steps
    rows = []
    for k in sorted(set(cfg.ks)):
        for rho in sorted(set(cfg.rhos)):
            for heuristic in sorted(set(cfg.heuristics)):
                stats = cell(k, rho, heuristic)
                rows.append(
                    ExperimentRow(
                        graph=cfg.label,
                        n=g.n,
                        m=g.m,
                        k=k,
                        rho=rho,
                        heuristic=heuristic,
                        added_edge_factor=stats.added / g.m if g.m else 0.0,
                        mean_steps=stats.mean_steps,
                        mean_substeps=stats.mean_substeps,
                        reduction_factor=reduction(baseline, stats.mean_steps),
                    )
                )
    rows.sort(key=lambda r: (r.graph, r.k, r.rho, r.heuristic))
    return rows


def _fmt(x: float) -> str:
    return format(x, ".6g")


def emit_csv(rows: list[ExperimentRow]) -> str:
    if not rows:
        raise GraphError("no rows to emit")
    lines = [CSV_HEADER + "\n"]
    for r in rows:
        lines.append(
            f"{r.graph},{r.n},{r.m},{r.k},{r.rho},{r.heuristic},"
            f"{_fmt(r.added_edge_factor)},{_fmt(r.mean_steps)},"
            f"{_fmt(r.mean_substeps)},{_fmt(r.reduction_factor)}\n"
        )
    return "".join(lines)


def emit_summary(rows: list[ExperimentRow]) -> str:
    if not rows:
        raise GraphError("no rows to emit")
    header = ("graph", "n", "m", "k", "rho", "heur", "added/m", "steps", "substeps", "reduction")
    table = [header]
    for r in rows:
        table.append(
            (
                r.graph,
                str(r.n),
                str(r.m),
                str(r.k),
                str(r.rho),
                r.heuristic,
                _fmt(r.added_edge_factor),
                _fmt(r.mean_steps),
                _fmt(r.mean_substeps),
                _fmt(r.reduction_factor),
            )
        )
    widths = [max(len(row[i]) for row in table) for i in range(len(header))]
    out = []
    for row in table:
        out.append("  ".join(cell.rjust(w) for cell, w in zip(row, widths)).rstrip() + "\n")
    return "".join(out)
