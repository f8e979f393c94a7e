"""Path validity and interestingness scoring.

An interesting path is a simple directed path whose concrete edge
signatures are all identical; wildcard edges match anything. Its score is
the sum of edge weights, each inflated by the natural log of (1 + rank),
where rank is the 1-based position of the edge along the path. Later
edges therefore contribute more than equal-weight early ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InputError, ParameterError
from .graph_model import SearchGraph, signature_compatible


def rank_factor(rank: int) -> float:
    """Weight multiplier log(1 + rank) for a 1-based edge rank."""
    return math.log(1 + rank)


def score(weights: list[float] | tuple[float, ...]) -> float:
    """Interestingness score of a path with the given ordered edge weights.

    Equals sum over ranks r of weights[r-1] * log(1 + r), natural log.
    The accumulation order is fixed (ascending rank) so that every solver
    in the package produces bit-identical totals for identical paths.
    """
    if len(weights) == 0:
        raise ParameterError("a path must have at least one edge")
    total = 0.0
    for r, w in enumerate(weights, start=1):
        if w < 0:
            raise InputError(f"negative edge weight {w} at rank {r}")
        total += w * rank_factor(r)
    return total


@dataclass(frozen=True)
class InterestingPath:
    """A validated interesting path.

    ``signature`` is the resolved signature shared by all concrete edges,
    or ``None`` when every edge on the path is a wildcard (undetermined).
    """

    edge_ids: tuple[int, ...]
    vertex_ids: tuple[int, ...]
    signature: str | None
    score: float

    def __len__(self) -> int:
        return len(self.edge_ids)


@dataclass(frozen=True)
class PathRejection:
    """Why an edge sequence is not an interesting path."""

    reason: str  # connectivity | vertex-repeat | signature-mismatch | pair-double-use
    detail: str


def validate_path(g: SearchGraph, edge_ids: list[int] | tuple[int, ...]) -> InterestingPath | PathRejection:
    """Check an edge-id sequence against the interesting-path conditions.

    Returns the resolved :class:`InterestingPath` on success, otherwise a
    :class:`PathRejection` naming the first violated condition. Unknown
    edge ids and empty sequences are caller errors and raise instead.
    """
    if not edge_ids:
        raise ParameterError("a path must have at least one edge")
    edges = []
    for eid in edge_ids:
        if eid not in g.edges:
            raise InputError(f"unknown edge id {eid}")
        edges.append(g.edges[eid])

    for prev, cur in zip(edges, edges[1:]):
        if prev.target != cur.source:
            return PathRejection(
                "connectivity",
                f"edge {prev.id} ends at {prev.target} but edge {cur.id} "
                f"starts at {cur.source}",
            )

    used_pairs: set[int] = set()
    for e in edges:
        if e.pair_id is None:
            continue
        under = min(e.id, e.pair_id)
        if under in used_pairs:
            return PathRejection(
                "pair-double-use",
                f"both orientations of bidirected pair {under} appear",
            )
        used_pairs.add(under)

    vertices = [edges[0].source] + [e.target for e in edges]
    seen: set[int] = set()
    for v in vertices:
        if v in seen:
            return PathRejection("vertex-repeat", f"vertex {v} visited twice")
        seen.add(v)

    resolved: str | None = None
    for e in edges:
        ok, merged = signature_compatible(resolved, e.signature)
        if not ok:
            return PathRejection(
                "signature-mismatch",
                f"edge {e.id} signature {e.signature!r} conflicts with "
                f"resolved signature {resolved!r}",
            )
        resolved = merged

    total = 0.0
    for r, e in enumerate(edges, start=1):
        total += e.weight * rank_factor(r)
    return InterestingPath(
        tuple(e.id for e in edges), tuple(vertices), resolved, total
    )
