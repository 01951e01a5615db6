"""Variable-radius stepping SSSP: engines, ball/shortcut preprocessing,
sequential baselines, and a step-count benchmark harness."""

from .baselines import (
    BfsResult,
    DeltaSteppingRun,
    DistanceVector,
    HopMatrix,
    SizeCapError,
    bellman_ford,
    bfs,
    bfs_settle_scans,
    delta_stepping,
    dijkstra,
    hop_matrix,
    k_radius_bruteforce,
)
from .bench import (
    BenchError,
    ExperimentConfig,
    ExperimentRow,
    config_from_json,
    emit_csv,
    emit_summary,
    run_experiment,
)
from .engine import (
    BoundsReport,
    SsspResult,
    StepRecord,
    check_bounds,
    radius_step_fast,
    radius_step_reference,
    radius_step_unweighted,
    step_records_csv,
)
from .generate import ADVERSARIAL_START, GeneratorSpec, WeightSpec, generate
from .graph import (
    UNREACHED,
    EdgeListParseError,
    Graph,
    GraphError,
    from_edges,
    parse_edge_list,
    reachable_set,
    write_edge_list,
)
from .preprocess import (
    Ball,
    BallTree,
    RadiusAssignment,
    ShortcutPlan,
    ValidationReport,
    build_1_rho,
    build_k_rho,
    compute_ball,
    min_hop_ball_tree,
    parse_radii,
    radii_for_graph,
    shortcut_dp,
    shortcut_greedy,
    validate_k_rho,
    write_radii,
)

__all__ = [
    "ADVERSARIAL_START",
    "Ball",
    "BallTree",
    "BenchError",
    "BfsResult",
    "BoundsReport",
    "DeltaSteppingRun",
    "DistanceVector",
    "EdgeListParseError",
    "ExperimentConfig",
    "ExperimentRow",
    "GeneratorSpec",
    "Graph",
    "GraphError",
    "HopMatrix",
    "RadiusAssignment",
    "ShortcutPlan",
    "SizeCapError",
    "SsspResult",
    "StepRecord",
    "UNREACHED",
    "ValidationReport",
    "WeightSpec",
    "bellman_ford",
    "bfs",
    "bfs_settle_scans",
    "build_1_rho",
    "build_k_rho",
    "check_bounds",
    "compute_ball",
    "config_from_json",
    "delta_stepping",
    "dijkstra",
    "emit_csv",
    "emit_summary",
    "from_edges",
    "generate",
    "hop_matrix",
    "k_radius_bruteforce",
    "min_hop_ball_tree",
    "parse_edge_list",
    "parse_radii",
    "radii_for_graph",
    "radius_step_fast",
    "radius_step_reference",
    "radius_step_unweighted",
    "reachable_set",
    "run_experiment",
    "shortcut_dp",
    "shortcut_greedy",
    "step_records_csv",
    "validate_k_rho",
    "write_edge_list",
    "write_radii",
]
