"""Interesting-path mining on directed graphs built from Mapper skeletons.

The package converts a Mapper 1-skeleton (or a raw point cloud) into a
weighted, signed, directed search graph and mines it for maximum-score
paths and edge-disjoint path decompositions: exact solvers where they
exist, greedy heuristics with score bounds elsewhere, and brute-force
oracles plus instance generators for verification.
"""

from .errors import (
    DomainError,
    InputError,
    MapperPathsError,
    ParameterError,
    SizeError,
)
from .graph_model import (
    WILDCARD,
    Edge,
    SearchGraph,
    Vertex,
    compute_signature,
    direct_edges,
    signature_compatible,
)
from .scoring import InterestingPath, PathRejection, score, validate_path
from .mapper_ingest import (
    Cluster,
    CoverSpec,
    Point,
    PointCloud,
    Skeleton,
    build_skeleton,
    skeleton_to_search_graph,
)
from .max_ip import (
    ScoreTable,
    best_path,
    build_score_table,
    max_ip,
    max_ip_sparse,
    per_edge_best,
)
from .decomposition import (
    PathCollection,
    ScoreBounds,
    at_least_k_ip,
    greedy_ip,
    greedy_k_ip,
    ip_bounds,
    one_ip,
    two_ip,
)
from .oracles import (
    brute_force_ip,
    brute_force_k_ip,
    brute_force_max_ip,
    enumerate_interesting_paths,
)
from .generators import (
    directed_cycle,
    gen_dir_hc,
    gen_random_dag,
    gen_x3c,
    gen_xkc,
    xkc_constants,
)
from .serialization import (
    load_graph,
    load_point_cloud_csv,
    load_report,
    load_skeleton,
    save_dot,
    save_graph,
    save_skeleton,
)

__version__ = "0.1.0"

__all__ = [
    "MapperPathsError", "InputError", "ParameterError", "DomainError", "SizeError",
    "WILDCARD", "Vertex", "Edge", "SearchGraph",
    "compute_signature", "signature_compatible", "direct_edges",
    "InterestingPath", "PathRejection", "score", "validate_path",
    "Point", "PointCloud", "CoverSpec", "Cluster", "Skeleton",
    "build_skeleton", "skeleton_to_search_graph",
    "ScoreTable", "build_score_table", "best_path",
    "max_ip", "max_ip_sparse", "per_edge_best",
    "PathCollection", "ScoreBounds",
    "one_ip", "two_ip", "greedy_ip", "greedy_k_ip", "at_least_k_ip", "ip_bounds",
    "brute_force_max_ip", "brute_force_k_ip", "brute_force_ip",
    "enumerate_interesting_paths",
    "directed_cycle", "gen_dir_hc", "gen_x3c", "gen_xkc", "gen_random_dag",
    "xkc_constants",
    "load_point_cloud_csv", "load_skeleton", "save_skeleton",
    "load_graph", "save_graph", "load_report", "save_dot",
    "__version__",
]
