"""Build vertex-weighted Mapper 1-skeletons from point clouds.

The construction is the minimal classic pipeline: cover each filter
dimension with uniformly wide, fractionally overlapping intervals, pull
the cover back to bins (Cartesian products across dimensions), cluster
each bin's points by single linkage on the target value, and link
clusters from different bins that share points. Points falling in an
overlap belong to several bins, which is what creates links.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from statistics import fmean
from typing import Mapping

from .errors import InputError, ParameterError
from .graph_model import SearchGraph, Vertex, direct_edges


@dataclass(frozen=True)
class Point:
    id: int
    filters: tuple[float, ...]
    target: float
    meta: Mapping | None = None


@dataclass(frozen=True)
class PointCloud:
    """Points with h filter values and one target value each."""

    points: tuple[Point, ...]

    def __post_init__(self):
        if not self.points:
            raise InputError("point cloud is empty")
        arities = {len(p.filters) for p in self.points}
        if len(arities) != 1:
            raise InputError(f"points disagree on filter arity: {sorted(arities)}")
        if arities.pop() < 1:
            raise InputError("points must carry at least one filter value")
        ids = [p.id for p in self.points]
        if len(set(ids)) != len(ids):
            raise InputError("duplicate point ids")

    @property
    def h(self) -> int:
        return len(self.points[0].filters)


@dataclass(frozen=True)
class CoverSpec:
    """Per-dimension interval counts and overlap fractions.

    Each dimension's intervals tile [min, max] of that filter with the
    given fractional overlap between consecutive intervals; the last
    interval is closed so the maximum is always covered.
    """

    interval_counts: tuple[int, ...]
    overlaps: tuple[float, ...]

    def __post_init__(self):
        if len(self.interval_counts) != len(self.overlaps):
            raise ParameterError("interval_counts and overlaps differ in length")
        for c in self.interval_counts:
            if c < 1:
                raise ParameterError(f"interval count must be >= 1, got {c}")
        for o in self.overlaps:
            if not 0 <= o < 1:
                raise ParameterError(f"overlap fraction must be in [0, 1), got {o}")

    @classmethod
    def uniform(cls, h: int, intervals: int = 10, overlap: float = 0.3) -> "CoverSpec":
        return cls((intervals,) * h, (overlap,) * h)


@dataclass(frozen=True)
class Cluster:
    id: int
    member_ids: tuple[int, ...]
    g_mean: float
    filter_means: tuple[float, ...]


@dataclass(frozen=True)
class Skeleton:
    """Clusters plus undirected links between clusters sharing points.

    ``members_known`` is False for skeletons ingested from files that do
    not list cluster members.
    """

    clusters: tuple[Cluster, ...]
    links: tuple[tuple[int, int], ...]
    members_known: bool = True


def _interval_memberships(values: list[float], count: int, overlap: float) -> list[list[int]]:
    """Interval indices containing each value, for one dimension."""
    lo, hi = min(values), max(values)
    if count == 1:
        return [[0] for _ in values]
    if lo == hi:
        raise InputError(
            "filter dimension has a single value but more than one interval; "
            "use interval count 1"
        )
    # Uniform width L with consecutive intervals overlapping by the given
    # fraction: count intervals of width L, starts spaced L*(1-overlap),
    # first at lo and last ending at hi.
    width = (hi - lo) / (count - (count - 1) * overlap)
    step = width * (1 - overlap)
    out: list[list[int]] = []
    for x in values:
        hits = []
        for i in range(count):
            a = lo + i * step
            if i == count - 1:
                if a <= x <= hi:
                    hits.append(i)
            elif a <= x < a + width:
                hits.append(i)
        out.append(hits)
    return out


def build_skeleton(cloud: PointCloud, cover: CoverSpec, gap: float) -> Skeleton:
    """Run the minimal Mapper construction.

    Within each nonempty pullback bin, points are clustered by single
    linkage on the target value: sorted target values split wherever
    consecutive ones differ by more than ``gap``. Cluster ids follow
    (bin lexicographic order, ascending minimum target), so identical
    inputs give identical skeletons.
    """
    if gap <= 0:
        raise ParameterError(f"gap must be positive, got {gap}")
    h = cloud.h
    if len(cover.interval_counts) != h:
        raise ParameterError(
            f"cover has {len(cover.interval_counts)} dimensions, cloud has {h}"
        )
    per_dim: list[list[list[int]]] = []
    for d in range(h):
        vals = [p.filters[d] for p in cloud.points]
        per_dim.append(
            _interval_memberships(vals, cover.interval_counts[d], cover.overlaps[d])
        )

    bins: dict[tuple[int, ...], list[Point]] = {}
    for idx, p in enumerate(cloud.points):
        for combo in product(*(per_dim[d][idx] for d in range(h))):
            bins.setdefault(combo, []).append(p)

    clusters: list[Cluster] = []
    point_clusters: dict[int, list[int]] = {}
    for combo in sorted(bins):
        members = sorted(bins[combo], key=lambda p: (p.target, p.id))
        start = 0
        for i in range(1, len(members) + 1):
            if i < len(members) and members[i].target - members[i - 1].target <= gap:
                continue
            chunk = members[start:i]
            start = i
            cid = len(clusters)
            clusters.append(
                Cluster(
                    cid,
                    tuple(p.id for p in chunk),
                    fmean(p.target for p in chunk),
                    tuple(
                        fmean(p.filters[d] for p in chunk) for d in range(h)
                    ),
                )
            )
            for p in chunk:
                point_clusters.setdefault(p.id, []).append(cid)

    links: set[tuple[int, int]] = set()
    for cids in point_clusters.values():
        for a, b in combinations(sorted(cids), 2):
            links.add((a, b))
    return Skeleton(tuple(clusters), tuple(sorted(links)))


def skeleton_to_search_graph(
    sk: Skeleton, rule: str = "a", tau: float | None = None
) -> SearchGraph:
    """Direct and sign the skeleton's links into a search graph."""
    vertices = [
        Vertex(
            c.id,
            c.g_mean,
            c.filter_means,
            len(c.member_ids) if sk.members_known else None,
        )
        for c in sk.clusters
    ]
    return direct_edges(vertices, sk.links, rule, tau)
