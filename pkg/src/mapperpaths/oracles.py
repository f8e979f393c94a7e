"""Exhaustive ground-truth solvers for small instances.

These enumerate every simple, signature-consistent directed path (and,
for the decomposition problems, every edge-disjoint family) and are the
reference the fast solvers are tested against. Size guards keep the
enumeration affordable; pass ``max_edges`` explicitly to override them
for targeted experiments.
"""

from __future__ import annotations

from .errors import SizeError
from .graph_model import SearchGraph, signature_compatible
from .max_ip import _key_rank
from .scoring import InterestingPath, rank_factor, validate_path
from .decomposition import PathCollection, _collect


def enumerate_interesting_paths(
    g: SearchGraph,
    *,
    min_length: int = 1,
    max_length: int | None = None,
):
    """Yield (edge_ids, score, resolved_signature) for every interesting path.

    Depth-first over all simple directed paths, resolving signatures on
    the way; wildcard edges extend any path, and the vertex-visited set
    makes using both orientations of a bidirected pair impossible.
    """
    cap = g.n - 1 if max_length is None else min(max_length, g.n - 1)

    def extend(seq, last_target, visited, resolved, total):
        rank = len(seq)
        if rank >= min_length:
            yield tuple(seq), total, resolved
        if rank >= cap:
            return
        for nxt_id in sorted(g.out_edge_ids[last_target]):
            nxt = g.edges[nxt_id]
            if nxt.target in visited:
                continue
            ok, merged = signature_compatible(resolved, nxt.signature)
            if not ok:
                continue
            seq.append(nxt_id)
            visited.add(nxt.target)
            yield from extend(
                seq, nxt.target, visited, merged,
                total + nxt.weight * rank_factor(rank + 1),
            )
            visited.discard(nxt.target)
            seq.pop()

    for eid in sorted(g.edges):
        e = g.edges[eid]
        resolved = None if e.is_wildcard else e.signature
        yield from extend(
            [eid], e.target, {e.source, e.target}, resolved,
            e.weight * rank_factor(1),
        )


def brute_force_max_ip(
    g: SearchGraph, *, max_edges: int = 24
) -> InterestingPath | None:
    """Maximum interesting path by full enumeration; works on any digraph.

    Follows the same tie rule as the table solvers: highest score, then
    smallest (length, final edge id, signature key), then the path whose
    edge ids, read backwards, are lexicographically smallest.
    """
    if g.m > max_edges:
        raise SizeError(
            f"enumeration guard exceeded: m={g.m} > {max_edges}; "
            "pass max_edges to override"
        )
    best: tuple[tuple, tuple[int, ...]] | None = None
    for seq, total, resolved in enumerate_interesting_paths(g):
        rank = (len(seq), seq[-1], _key_rank(resolved), tuple(reversed(seq[:-1])))
        if best is None or total > best[0][0] or (total == best[0][0] and rank < best[0][1]):
            best = ((total, rank), seq)
    if best is None:
        return None
    path = validate_path(g, list(best[1]))
    assert isinstance(path, InterestingPath)
    return path


def _path_inventory(g: SearchGraph, lengths: "tuple[int, ...] | None"):
    """All interesting paths (optionally of given lengths) with underlying
    edge sets, plus each underlying edge's best possible rank contribution."""
    paths = []
    for seq, total, _resolved in enumerate_interesting_paths(g):
        if lengths is not None and len(seq) not in lengths:
            continue
        unders = frozenset(g.underlying(eid) for eid in seq)
        paths.append((seq, total, unders))
    contrib: dict[int, float] = {}
    for seq, _total, _unders in paths:
        for rank, eid in enumerate(seq, start=1):
            u = g.underlying(eid)
            c = g.edges[eid].weight * rank_factor(rank)
            if c > contrib.get(u, 0.0):
                contrib[u] = c
    return paths, contrib


def _best_disjoint_family(
    g: SearchGraph,
    paths,
    contrib: dict[int, float],
    *,
    exact_cover: bool,
) -> tuple[list[tuple[int, ...]], float]:
    """Exhaustive search over edge-disjoint families of the given paths.

    Branches per underlying edge in ascending id order: either it stays
    uncovered (forbidden under ``exact_cover``) or one of the paths
    through it joins the family. Pruned with the additive bound from each
    uncovered edge's best possible contribution.
    """
    under_ids = sorted({g.underlying(eid) for eid in g.edges})
    through: dict[int, list[int]] = {u: [] for u in under_ids}
    for idx, (seq, total, unders) in enumerate(paths):
        for u in unders:
            through[u].append(idx)
    # Higher-scoring paths first so good families are found early.
    for u in under_ids:
        through[u].sort(key=lambda idx: -paths[idx][1])

    best_total = float("-inf")
    best_family: list[tuple[int, ...]] = []
    available = set(under_ids)
    bound_sum = sum(contrib.get(u, 0.0) for u in under_ids)

    def recurse(pos: int, total: float, family: list[int]):
        nonlocal best_total, best_family, bound_sum
        while pos < len(under_ids) and under_ids[pos] not in available:
            pos += 1
        if pos == len(under_ids):
            if total > best_total:
                best_total = total
                best_family = [paths[i][0] for i in family]
            return
        if total + bound_sum <= best_total:
            return
        u = under_ids[pos]
        for idx in through[u]:
            seq, ptotal, unders = paths[idx]
            if not unders <= available:
                continue
            available.difference_update(unders)
            removed = sum(contrib.get(x, 0.0) for x in unders)
            bound_sum -= removed
            family.append(idx)
            recurse(pos + 1, total + ptotal, family)
            family.pop()
            bound_sum += removed
            available.update(unders)
        if not exact_cover:
            available.discard(u)
            c = contrib.get(u, 0.0)
            bound_sum -= c
            recurse(pos + 1, total, family)
            bound_sum += c
            available.add(u)

    recurse(0, 0.0, [])
    return best_family, best_total


def _family_to_collection(
    g: SearchGraph, family: list[tuple[int, ...]], mode: str, k: int | None
) -> PathCollection:
    out = []
    for seq in sorted(family):
        p = validate_path(g, list(seq))
        assert isinstance(p, InterestingPath)
        out.append(p)
    return _collect(out, mode, k)


def brute_force_k_ip(g: SearchGraph, k: int, *, max_edges: int = 12) -> PathCollection:
    """Optimal family of edge-disjoint interesting k-paths, by enumeration."""
    if g.m > max_edges:
        raise SizeError(
            f"enumeration guard exceeded: m={g.m} > {max_edges}; "
            "pass max_edges to override"
        )
    paths, contrib = _path_inventory(g, (k,))
    family, total = _best_disjoint_family(g, paths, contrib, exact_cover=False)
    if total == float("-inf"):
        family = []
    return _family_to_collection(g, family, "k-ip", k)


def brute_force_ip(g: SearchGraph, *, max_edges: int = 12) -> PathCollection:
    """Optimal exact-cover decomposition into interesting paths.

    Every underlying edge must lie on exactly one path of the family;
    single edges are always interesting paths, so a cover exists.
    """
    if g.m > max_edges:
        raise SizeError(
            f"enumeration guard exceeded: m={g.m} > {max_edges}; "
            "pass max_edges to override"
        )
    paths, contrib = _path_inventory(g, None)
    family, total = _best_disjoint_family(g, paths, contrib, exact_cover=True)
    if total == float("-inf"):
        family = []
    return _family_to_collection(g, family, "ip", None)
