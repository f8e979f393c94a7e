"""Edge-disjoint interesting-path decompositions.

Exact solvers exist for paths of one edge (every edge by itself) and two
edges (reduction to maximum-weight matching on a compatibility graph).
For the general problems only greedy heuristics are offered: repeatedly
extract a maximum interesting path (optionally constrained to exactly k
or at least k edges), remove its edges, and recurse. Additive lower and
upper bounds sandwich the optimum of the full decomposition.

Disjointness is always on underlying skeleton links: the two orientations
of a bidirected pair count as one edge, and using both is a violation.
"""

from __future__ import annotations

from dataclasses import dataclass
import networkx as nx

from .errors import DomainError, ParameterError, SizeError
from .graph_model import SearchGraph, signature_compatible
from .max_ip import best_path, build_score_table, per_edge_best
from .scoring import InterestingPath, rank_factor, validate_path


@dataclass(frozen=True)
class PathCollection:
    """An edge-disjoint family of interesting paths.

    ``mode`` records which problem produced it: "1-ip", "2-ip", "ip",
    "k-ip" or "atleast-k-ip" (the latter two with ``k`` set).
    ``covered_edge_count`` counts distinct underlying edges.
    """

    paths: tuple[InterestingPath, ...]
    total_score: float
    covered_edge_count: int
    mode: str
    k: int | None = None


@dataclass(frozen=True)
class ScoreBounds:
    lower: float
    upper: float


def _collect(paths: list[InterestingPath], mode: str, k: int | None = None) -> PathCollection:
    total = 0.0
    covered = 0
    for p in paths:
        total += p.score
        covered += len(p.edge_ids)
    return PathCollection(tuple(paths), total, covered, mode, k)


def _require_dag(g: SearchGraph) -> None:
    if not g.is_dag:
        raise DomainError(
            "graph is cyclic: greedy decomposition requires a DAG; "
            "use the brute-force oracle on small instances"
        )


def one_ip(g: SearchGraph) -> PathCollection:
    """Optimal 1-edge decomposition: every underlying edge by itself.

    For bidirected pairs only the lower-id orientation is emitted (both
    score the same). Works on any graph.
    """
    paths: list[InterestingPath] = []
    taken: set[int] = set()
    for eid in sorted(g.edges):
        under = g.underlying(eid)
        if under in taken:
            continue
        taken.add(under)
        p = validate_path(g, [eid])
        assert isinstance(p, InterestingPath)
        paths.append(p)
    return _collect(paths, "1-ip")


def _two_path_candidates(g: SearchGraph) -> dict[tuple[int, int], tuple[float, tuple[int, int]]]:
    """Best interesting 2-path per unordered pair of underlying edges.

    Maps (underlying_i, underlying_j) with i < j to (score, realization),
    the realization being the ordered edge ids of the better of the valid
    orientations/orders; equal scores prefer the realization with the
    smaller first edge id, then smaller second.
    """
    out: dict[tuple[int, int], tuple[float, tuple[int, int]]] = {}
    for first_id in sorted(g.edges):
        first = g.edges[first_id]
        for second_id in g.out_edge_ids[first.target]:
            second = g.edges[second_id]
            if second_id == first_id:
                continue
            u_first, u_second = g.underlying(first_id), g.underlying(second_id)
            if u_first == u_second:
                continue
            if second.target == first.source:
                continue  # would revisit the start vertex
            ok, _ = signature_compatible(
                None if first.is_wildcard else first.signature, second.signature
            )
            if not ok:
                continue
            s = first.weight * rank_factor(1) + second.weight * rank_factor(2)
            key = (min(u_first, u_second), max(u_first, u_second))
            cur = out.get(key)
            real = (first_id, second_id)
            if cur is None or s > cur[0] or (s == cur[0] and real < cur[1]):
                out[key] = (s, real)
    return out


def _exhaustive_matching(
    nodes: list[int], links: dict[tuple[int, int], float]
) -> set[tuple[int, int]]:
    """Maximum-weight matching by branch-and-bound enumeration.

    Certification fallback for small compatibility graphs; guards at 16
    nodes because the search is exponential.
    """
    if len(nodes) > 16:
        raise SizeError(
            f"exhaustive matching guard exceeded: {len(nodes)} nodes > 16"
        )
    partners: dict[int, list[tuple[int, float]]] = {v: [] for v in nodes}
    for (a, b), w in links.items():
        partners[a].append((b, w))
        partners[b].append((a, w))
    order = sorted(nodes)
    best_total = -1.0
    best: set[tuple[int, int]] = set()

    def recurse(idx: int, used: set[int], total: float, chosen: set[tuple[int, int]]):
        nonlocal best_total, best
        while idx < len(order) and order[idx] in used:
            idx += 1
        if idx == len(order):
            if total > best_total:
                best_total = total
                best = set(chosen)
            return
        v = order[idx]
        recurse(idx + 1, used | {v}, total, chosen)
        for w, wt in sorted(partners[v]):
            if w in used:
                continue
            chosen.add((min(v, w), max(v, w)))
            recurse(idx + 1, used | {v, w}, total + wt, chosen)
            chosen.discard((min(v, w), max(v, w)))

    recurse(0, set(), 0.0, set())
    return best


def two_ip(g: SearchGraph, *, matching: str = "blossom") -> PathCollection:
    """Optimal 2-edge decomposition via maximum-weight matching.

    Builds the compatibility graph with one node per underlying edge and
    a link wherever two of them can form an interesting 2-path, weighted
    by the better ordering; a maximum-weight matching then realizes the
    optimal family. ``matching`` selects the solver: "blossom" (exact
    general matching) or "exhaustive" (brute force, small graphs only).
    Works on cyclic graphs too.
    """
    if matching not in ("blossom", "exhaustive"):
        raise ParameterError(f"unknown matching method {matching!r}")
    candidates = _two_path_candidates(g)
    if not candidates:
        return _collect([], "2-ip", 2)
    nodes = sorted({v for pair in candidates for v in pair})
    weights = {pair: s for pair, (s, _) in candidates.items()}
    if matching == "exhaustive":
        matched = _exhaustive_matching(nodes, weights)
    else:
        comp = nx.Graph()
        comp.add_nodes_from(nodes)
        for (a, b), w in sorted(weights.items()):
            comp.add_edge(a, b, weight=w)
        matched = nx.max_weight_matching(comp, maxcardinality=False)
    paths: list[InterestingPath] = []
    for a, b in matched:
        key = (min(a, b), max(a, b))
        _, realization = candidates[key]
        p = validate_path(g, list(realization))
        assert isinstance(p, InterestingPath)
        paths.append(p)
    paths.sort(key=lambda p: p.edge_ids)
    return _collect(paths, "2-ip", 2)


def _remove_path(g: SearchGraph, remaining: set[int], path: InterestingPath) -> None:
    for eid in path.edge_ids:
        remaining.discard(eid)
        pair = g.edges[eid].pair_id
        if pair is not None:
            remaining.discard(pair)


def greedy_ip(g: SearchGraph, *, max_paths: int | None = None) -> PathCollection:
    """Greedy full decomposition of a DAG.

    Repeatedly extracts a maximum interesting path and removes its edges
    until none remain, so the result covers every underlying edge exactly
    once. No optimality guarantee. ``max_paths`` stops early after that
    many extractions, leaving the rest uncovered.
    """
    _require_dag(g)
    remaining = set(g.edges)
    paths: list[InterestingPath] = []
    while remaining:
        if max_paths is not None and len(paths) >= max_paths:
            break
        table = build_score_table(g, edge_ids=remaining, sparse=True)
        path = best_path(table)
        if path is None:
            break
        paths.append(path)
        _remove_path(g, remaining, path)
    return _collect(paths, "ip")


def greedy_k_ip(
    g: SearchGraph, k: int, *, max_paths: int | None = None
) -> PathCollection:
    """Greedy decomposition into paths of exactly ``k`` edges.

    The table is capped at k columns and each extraction backtracks from
    column k, so every output path has exactly k edges; extraction stops
    when no k-edge interesting path remains. Edges not on any chosen path
    stay uncovered.
    """
    _require_dag(g)
    if not 1 <= k <= g.n - 1:
        raise ParameterError(f"k must be in [1, {g.n - 1}], got {k}")
    remaining = set(g.edges)
    paths: list[InterestingPath] = []
    while remaining:
        if max_paths is not None and len(paths) >= max_paths:
            break
        table = build_score_table(g, edge_ids=remaining, max_length=k, sparse=True)
        path = best_path(table, min_length=k, max_length=k)
        if path is None:
            break
        paths.append(path)
        _remove_path(g, remaining, path)
    return _collect(paths, "k-ip", k)


def at_least_k_ip(
    g: SearchGraph, k: int, *, max_paths: int | None = None
) -> PathCollection:
    """Greedy decomposition into paths of at least ``k`` edges.

    Each round takes the globally best path among those with >= k edges
    (maximum over table columns k and beyond), removes it, and repeats
    until no such path remains.
    """
    _require_dag(g)
    if not 1 <= k <= g.n - 1:
        raise ParameterError(f"k must be in [1, {g.n - 1}], got {k}")
    remaining = set(g.edges)
    paths: list[InterestingPath] = []
    while remaining:
        if max_paths is not None and len(paths) >= max_paths:
            break
        table = build_score_table(g, edge_ids=remaining, sparse=True)
        path = best_path(table, min_length=k)
        if path is None:
            break
        paths.append(path)
        _remove_path(g, remaining, path)
    return _collect(paths, "atleast-k-ip", k)


def ip_bounds(g: SearchGraph) -> ScoreBounds:
    """Sandwich bounds for the optimal full decomposition of a DAG.

    Lower: every edge as its own path, sum of w(e) * log 2. Upper: the
    sum over edges of the best interesting path ending there (an optimal
    family cannot beat its per-edge maxima).
    """
    _require_dag(g)
    lower = 0.0
    for eid in sorted(g.edges):
        lower += g.edges[eid].weight * rank_factor(1)
    upper = sum(per_edge_best(g).values())
    return ScoreBounds(lower, upper)
