"""Weighted, signed, directed search graphs.

A search graph is the directed view of a Mapper 1-skeleton: vertices keep
the mean target value as their weight, every edge carries the absolute
difference of its endpoint weights, and an h-bit signature records how the
filter means covary along the edge. Two directing rules are supported:

* rule "a": every undirected link becomes one edge from the lower-weight
  vertex to the higher-weight one (ascending weight), which guarantees a
  DAG;
* rule "b": links whose endpoint weights differ by at most ``tau`` become
  a bidirected pair with wildcard signatures, all others follow rule "a".

Graphs are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import InputError, ParameterError

#: Signature value carried by both orientations of a bidirected edge; it
#: matches any concrete signature during path detection.
WILDCARD = "*"


@dataclass(frozen=True)
class Vertex:
    """A cluster of the underlying skeleton.

    ``weight`` is the mean target value of the cluster's members,
    ``filter_means`` the per-filter means, and ``member_count`` the
    cluster size (``None`` when ingested from a bare skeleton that does
    not list members).
    """

    id: int
    weight: float
    filter_means: tuple[float, ...]
    member_count: int | None = None


@dataclass(frozen=True)
class Edge:
    """A directed edge with nonnegative weight and signature.

    ``pair_id`` is the id of the opposite orientation when this edge is
    one half of a bidirected (rule "b") pair; both halves carry the
    wildcard signature and equal weights.
    """

    id: int
    source: int
    target: int
    weight: float
    signature: str
    pair_id: int | None = None

    @property
    def is_wildcard(self) -> bool:
        return self.signature == WILDCARD


def compute_signature(source: Vertex, target: Vertex) -> str:
    """Return the h-bit signature of the directed edge source -> target.

    Bit i is "1" when the i-th filter mean does not decrease along the
    edge (ties included), "0" otherwise.
    """
    if len(source.filter_means) != len(target.filter_means):
        raise InputError(
            f"filter arity mismatch between vertices {source.id} and {target.id}: "
            f"{len(source.filter_means)} vs {len(target.filter_means)}"
        )
    return "".join(
        "1" if fu <= fv else "0"
        for fu, fv in zip(source.filter_means, target.filter_means)
    )


def signature_compatible(path_sig: str | None, edge_sig: str) -> tuple[bool, str | None]:
    """Combine a path's resolved signature with the next edge's signature.

    ``path_sig`` is the signature resolved so far (``None`` when every
    edge seen was a wildcard). Returns ``(accepted, resolved)``: two
    concrete signatures accept only if equal; a wildcard on either side
    accepts and the resolution stays with the concrete one, or remains
    undetermined when there is none.
    """
    if edge_sig == WILDCARD:
        return True, path_sig
    if path_sig is None:
        return True, edge_sig
    if path_sig == edge_sig:
        return True, path_sig
    return False, None


def _topological_order(
    vertex_ids: Iterable[int], edges: Iterable[Edge]
) -> list[int] | None:
    """Kahn's algorithm; ``None`` when the edge set contains a cycle."""
    indeg = {v: 0 for v in vertex_ids}
    out: dict[int, list[int]] = {v: [] for v in indeg}
    for e in edges:
        indeg[e.target] += 1
        out[e.source].append(e.target)
    ready = sorted(v for v, d in indeg.items() if d == 0)
    order: list[int] = []
    while ready:
        v = ready.pop()
        order.append(v)
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                ready.append(w)
    return order if len(order) == len(indeg) else None


class SearchGraph:
    """Immutable directed search graph with derived statistics.

    Construction validates structural invariants (existing endpoints, no
    self loops, at most one edge per ordered vertex pair, nonnegative
    weights, uniform signature width, reciprocal bidirected pairs) and
    precomputes ``n``, ``m``, ``max_indegree``, ``is_dag`` and, for DAGs,
    the ``diameter`` (number of edges of a longest directed path).
    """

    def __init__(
        self,
        vertices: Iterable[Vertex],
        edges: Iterable[Edge],
        h: int,
        rule: str = "a",
        tau: float = 0.0,
        meta: Mapping | None = None,
    ):
        if h < 1:
            raise ParameterError(f"signature width h must be >= 1, got {h}")
        if rule not in ("a", "b"):
            raise ParameterError(f"rule must be 'a' or 'b', got {rule!r}")
        if tau < 0:
            raise ParameterError(f"tau must be nonnegative, got {tau}")

        self.h = h
        self.rule = rule
        self.tau = float(tau)
        self.meta = dict(meta) if meta else {}

        self.vertices: dict[int, Vertex] = {}
        for v in sorted(vertices, key=lambda v: v.id):
            if v.id in self.vertices:
                raise InputError(f"duplicate vertex id {v.id}")
            self.vertices[v.id] = v

        self.edges: dict[int, Edge] = {}
        seen_pairs: set[tuple[int, int]] = set()
        for e in sorted(edges, key=lambda e: e.id):
            if e.id in self.edges:
                raise InputError(f"duplicate edge id {e.id}")
            if e.source not in self.vertices or e.target not in self.vertices:
                raise InputError(f"edge {e.id} references unknown vertex")
            if e.source == e.target:
                raise InputError(f"edge {e.id} is a self-loop on vertex {e.source}")
            if (e.source, e.target) in seen_pairs:
                raise InputError(
                    f"multiple edges for ordered pair ({e.source}, {e.target})"
                )
            if e.weight < 0:
                raise InputError(f"edge {e.id} has negative weight {e.weight}")
            if e.signature != WILDCARD and (
                len(e.signature) != h or any(b not in "01" for b in e.signature)
            ):
                raise InputError(
                    f"edge {e.id} signature {e.signature!r} is not an {h}-bit string"
                )
            seen_pairs.add((e.source, e.target))
            self.edges[e.id] = e

        for e in self.edges.values():
            if e.pair_id is None:
                continue
            partner = self.edges.get(e.pair_id)
            if (
                partner is None
                or partner.pair_id != e.id
                or partner.source != e.target
                or partner.target != e.source
                or partner.weight != e.weight
                or not (partner.is_wildcard and e.is_wildcard)
            ):
                raise InputError(
                    f"edge {e.id} has an inconsistent bidirected pair {e.pair_id}"
                )

        self.out_edge_ids: dict[int, tuple[int, ...]] = {}
        self.in_edge_ids: dict[int, tuple[int, ...]] = {}
        out_acc: dict[int, list[int]] = {v: [] for v in self.vertices}
        in_acc: dict[int, list[int]] = {v: [] for v in self.vertices}
        for e in self.edges.values():
            out_acc[e.source].append(e.id)
            in_acc[e.target].append(e.id)
        for v in self.vertices:
            self.out_edge_ids[v] = tuple(out_acc[v])
            self.in_edge_ids[v] = tuple(in_acc[v])

        self.n = len(self.vertices)
        self.m = len(self.edges)
        self.max_indegree = max((len(ids) for ids in in_acc.values()), default=0)
        order = _topological_order(self.vertices, self.edges.values())
        self.is_dag = order is not None
        self.diameter: int | None = None
        if order is not None:
            depth = {v: 0 for v in self.vertices}
            for v in order:
                for eid in self.out_edge_ids[v]:
                    w = self.edges[eid].target
                    if depth[v] + 1 > depth[w]:
                        depth[w] = depth[v] + 1
            self.diameter = max(depth.values(), default=0)
        self.signatures: tuple[str, ...] = tuple(
            sorted({e.signature for e in self.edges.values() if not e.is_wildcard})
        )

    def underlying(self, edge_id: int) -> int:
        """Canonical id of the underlying skeleton link of an edge.

        The two orientations of a bidirected pair map to the same value,
        so edge-disjointness can be checked on underlying ids.
        """
        e = self.edges[edge_id]
        return edge_id if e.pair_id is None else min(edge_id, e.pair_id)

    def underlying_ids(self) -> set[int]:
        return {self.underlying(eid) for eid in self.edges}

    def subgraph(self, edge_ids: Iterable[int]) -> "SearchGraph":
        """A new graph over the same vertices restricted to ``edge_ids``.

        Pair links are kept only when both orientations survive.
        """
        keep = set(edge_ids)
        unknown = keep - self.edges.keys()
        if unknown:
            raise InputError(f"unknown edge ids in subgraph: {sorted(unknown)}")
        edges = []
        for eid in keep:
            e = self.edges[eid]
            if e.pair_id is not None and e.pair_id not in keep:
                e = Edge(e.id, e.source, e.target, e.weight, e.signature, None)
            edges.append(e)
        return SearchGraph(
            self.vertices.values(), edges, self.h, self.rule, self.tau, self.meta
        )

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return (
            f"SearchGraph(n={self.n}, m={self.m}, h={self.h}, rule={self.rule!r}, "
            f"dag={self.is_dag})"
        )


def direct_edges(
    vertices: Iterable[Vertex],
    links: Iterable[tuple[int, int]],
    rule: str = "a",
    tau: float | None = None,
) -> SearchGraph:
    """Direct the undirected ``links`` of a vertex-weighted skeleton.

    Rule "a" directs each link from the lower-weight endpoint to the
    higher-weight one; exact weight ties go from the smaller vertex id to
    the larger so that the output is always a DAG. Rule "b" additionally
    requires ``tau``: links whose endpoint weights differ by at most
    ``tau`` become a bidirected wildcard pair, the rest follow rule "a".
    """
    if rule not in ("a", "b"):
        raise ParameterError(f"rule must be 'a' or 'b', got {rule!r}")
    if rule == "b" and tau is None:
        raise ParameterError("rule 'b' requires an explicit tau")
    if tau is not None and tau < 0:
        raise ParameterError(f"tau must be nonnegative, got {tau}")
    tau_val = float(tau) if tau is not None else 0.0

    verts = sorted(vertices, key=lambda v: v.id)
    if not verts:
        raise InputError("skeleton has no vertices")
    arities = {len(v.filter_means) for v in verts}
    if len(arities) != 1:
        raise InputError(f"vertices disagree on filter arity: {sorted(arities)}")
    h = arities.pop()
    if h < 1:
        raise InputError("vertices must carry at least one filter mean")
    by_id = {v.id: v for v in verts}
    if len(by_id) != len(verts):
        raise InputError("duplicate vertex ids in skeleton")

    edges: list[Edge] = []
    seen: set[frozenset[int]] = set()
    next_id = 0
    for a, b in links:
        if a not in by_id or b not in by_id:
            raise InputError(f"link ({a}, {b}) references an unknown vertex")
        if a == b:
            raise InputError(f"self-loop link on vertex {a} rejected")
        key = frozenset((a, b))
        if key in seen:
            raise InputError(f"duplicate undirected link between {a} and {b}")
        seen.add(key)
        u, v = by_id[a], by_id[b]
        delta = abs(u.weight - v.weight)
        if rule == "b" and delta <= tau_val:
            edges.append(Edge(next_id, u.id, v.id, delta, WILDCARD, next_id + 1))
            edges.append(Edge(next_id + 1, v.id, u.id, delta, WILDCARD, next_id))
            next_id += 2
            continue
        if u.weight > v.weight or (u.weight == v.weight and u.id > v.id):
            u, v = v, u
        edges.append(Edge(next_id, u.id, v.id, delta, compute_signature(u, v)))
        next_id += 1

    return SearchGraph(verts, edges, h, rule, tau_val)
