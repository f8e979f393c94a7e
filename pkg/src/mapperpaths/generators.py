"""Instance generators: reduction gadgets and seeded random DAGs.

The gadget families make the hardness constructions available as test
fixtures with their exact score targets precomputed in ``graph.meta``:

* :func:`gen_dir_hc` splits one vertex of a digraph so that a simple path
  of score log((n+1)!) exists exactly when the input had a directed
  Hamiltonian cycle;
* :func:`gen_x3c` / :func:`gen_xkc` build, per k-element set, a DAG object
  whose k-path decompositions score W_in when the set joins an exact
  cover and at most W_out otherwise, so the optimal k-IP total equals
  s0 = p*W_out + k(p-1)q*log2 + q*log((k+1)!) exactly when an exact cover
  exists.

Vertex weights and filter means of generated graphs are placeholders;
edge weights and signatures are assigned directly.
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError, ParameterError
from .graph_model import Edge, SearchGraph, Vertex


def _plain_vertex(vid: int, h: int = 1, weight: float = 0.0) -> Vertex:
    return Vertex(vid, weight, (0.0,) * h)


def directed_cycle(n: int) -> list[tuple[int, int]]:
    """Edge list of the directed cycle 0 -> 1 -> ... -> n-1 -> 0."""
    return [(i, (i + 1) % n) for i in range(n)]


def gen_dir_hc(
    digraph_edges: Iterable[tuple[int, int]], n: int | None = None
) -> SearchGraph:
    """Hamiltonian-cycle search instance from a digraph on vertices 0..n-1.

    Vertex 0 is split into a source copy (keeps id 0, keeps the outgoing
    edges) and a sink copy (new id n, receives the incoming edges); all
    edges get unit weight and the same signature. The resulting graph has
    a simple path scoring s0 = log((n+1)!) exactly when the input digraph
    has a directed Hamiltonian cycle; ``meta`` records s0. The output can
    be cyclic, so solve it with the brute-force oracle.
    """
    edges = list(digraph_edges)
    if n is None:
        n = max((max(u, v) for u, v in edges), default=-1) + 1
    if n < 3:
        raise ParameterError(f"need at least 3 vertices, got {n}")
    seen: set[tuple[int, int]] = set()
    out_edges: list[Edge] = []
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
        if u == v:
            raise InputError(f"self-loop ({u}, {v}) rejected")
        if (u, v) in seen:
            raise InputError(f"duplicate edge ({u}, {v})")
        seen.add((u, v))
        src = u
        dst = n if v == 0 else v
        out_edges.append(Edge(len(out_edges), src, dst, 1.0, "1"))
    vertices = [_plain_vertex(i) for i in range(n + 1)]
    s0 = math.log(math.factorial(n + 1))
    meta = {"kind": "dir-hc", "n": n, "s0": s0}
    return SearchGraph(vertices, out_edges, h=1, rule="a", tau=0.0, meta=meta)


def xkc_constants(k: int, p: int, q: int) -> dict[str, float]:
    """Score constants of the exact-k-cover instance family.

    W_in is the best total a single set object can contribute when its
    element edges are used (k heavy-started k-paths plus one all-unit
    k-path), W_out the best without them (k all-unit k-paths), and s0 the
    optimal k-IP total when an exact cover of the q*k elements exists.
    """
    log_fact = math.log(math.factorial(k + 1))
    w_in = (k + 1) * log_fact + k * (p - 1) * math.log(2)
    w_out = k * log_fact
    s0 = p * w_out + k * (p - 1) * q * math.log(2) + q * log_fact
    return {"w_in": w_in, "w_out": w_out, "s0": s0}


def gen_xkc(k: int, sets: Sequence[Sequence[int]], q: int) -> SearchGraph:
    """Exact-k-cover decision instance over elements 0..k*q-1.

    Every element x gets one heavy edge (weight p = number of sets) from
    a private source v_x to its head h_x; sets containing x share it.
    Each set adds, over its sorted elements x_1 < ... < x_k, one object
    of k*k private unit edges: a (k-1)-edge tail descending from every
    head (the only way to continue past a heavy edge), and a collector
    chain b_1 -> b_2 -> ... -> b_k -> c over the tail ends. The object
    decomposes either into the k heavy-started k-paths [heavy, tail...]
    plus the all-unit collector k-path (score W_in), or into the k
    all-unit k-paths [tail..., collector edge] that avoid the heavy
    edges (score W_out). Heads have no other outgoing or incoming unit
    edges, so interesting paths never cross between set objects and a
    partially used object strands some of its units.

    All signatures are identical.
    """
    if k < 3:
        raise ParameterError(f"k must be >= 3, got {k}")
    if q < 1:
        raise ParameterError(f"q must be >= 1, got {q}")
    p = len(sets)
    if p < q:
        raise ParameterError(f"need at least q={q} sets, got {p}")
    element_count = k * q
    norm_sets: list[tuple[int, ...]] = []
    for s in sets:
        t = tuple(sorted(s))
        if len(t) != k or len(set(t)) != k:
            raise InputError(f"set {tuple(s)} must have {k} distinct elements")
        if not all(0 <= x < element_count for x in t):
            raise InputError(f"set {tuple(s)} outside element range 0..{element_count - 1}")
        if t in norm_sets:
            raise InputError(f"duplicate set {t}")
        norm_sets.append(t)

    heavy = float(p)
    # Element sources 0..kq-1, heads kq..2kq-1, then per-object privates.
    head = {x: element_count + x for x in range(element_count)}
    vertices = [_plain_vertex(i) for i in range(2 * element_count)]
    edges: list[Edge] = [
        Edge(x, x, head[x], heavy, "1") for x in range(element_count)
    ]
    next_vertex = 2 * element_count
    for s in norm_sets:
        tail_ends = []
        for x in s:
            prev = head[x]
            for _ in range(k - 1):
                vertices.append(_plain_vertex(next_vertex))
                edges.append(Edge(len(edges), prev, next_vertex, 1.0, "1"))
                prev = next_vertex
                next_vertex += 1
            tail_ends.append(prev)
        vertices.append(_plain_vertex(next_vertex))
        chain = tail_ends + [next_vertex]
        next_vertex += 1
        for a, b in zip(chain, chain[1:]):
            edges.append(Edge(len(edges), a, b, 1.0, "1"))

    meta = {
        "kind": "x3c" if k == 3 else "xkc",
        "k": k,
        "p": p,
        "q": q,
        "heavy_weight": heavy,
        "sets": [list(s) for s in norm_sets],
        "element_edge_ids": list(range(element_count)),
    }
    meta.update(xkc_constants(k, p, q))
    return SearchGraph(vertices, edges, h=1, rule="a", tau=0.0, meta=meta)


def gen_x3c(sets: Sequence[Sequence[int]], q: int) -> SearchGraph:
    """Exact-3-cover instance; see :func:`gen_xkc`."""
    return gen_xkc(3, sets, q)


def gen_random_dag(
    n: int,
    density: float,
    signature_count: int = 1,
    weight_range: tuple[float, float] = (0.0, 1.0),
    seed: int = 0,
) -> SearchGraph:
    """Seeded random DAG with uniform weights and signatures.

    Vertices 0..n-1 are placed in a random topological order; each
    forward pair becomes an edge with probability ``density``. Weights
    are uniform over ``weight_range`` and signatures uniform over the
    first ``signature_count`` bit patterns of the minimal width. The
    same seed always produces the same graph.
    """
    if n < 1:
        raise ParameterError(f"n must be >= 1, got {n}")
    if not 0 < density <= 1:
        raise ParameterError(f"density must be in (0, 1], got {density}")
    if signature_count < 1:
        raise ParameterError(f"signature_count must be >= 1, got {signature_count}")
    lo, hi = weight_range
    if lo < 0 or hi < lo:
        raise ParameterError(f"invalid weight range {weight_range}")

    rng = np.random.default_rng(seed)
    order = rng.permutation(n)
    pairs: list[tuple[int, int]] = []
    for i in range(n - 1):
        mask = rng.random(n - 1 - i) < density
        src = int(order[i])
        for off in np.nonzero(mask)[0]:
            pairs.append((src, int(order[i + 1 + int(off)])))
    m = len(pairs)
    weights = rng.uniform(lo, hi, size=m)
    sig_idx = rng.integers(0, signature_count, size=m)
    h = max(1, (signature_count - 1).bit_length())
    sig_pool = [format(i, f"0{h}b") for i in range(signature_count)]

    # Vertex weight equals the topological position, so edges ascend.
    position = {int(v): float(i) for i, v in enumerate(order)}
    vertices = [Vertex(v, position[v], (0.0,) * h) for v in range(n)]
    edges = [
        Edge(i, u, v, float(weights[i]), sig_pool[int(sig_idx[i])])
        for i, (u, v) in enumerate(pairs)
    ]
    meta = {
        "kind": "random-dag",
        "seed": seed,
        "density": density,
        "signature_count": signature_count,
        "weight_range": [lo, hi],
    }
    return SearchGraph(vertices, edges, h=h, rule="a", tau=0.0, meta=meta)
