import pytest

from mapperpaths import Edge, SearchGraph, Vertex


def make_graph(edge_spec, h=1, n=None, rule="a", tau=0.0, pairs=()):
    """Build a SearchGraph from (source, target, weight, signature) tuples.

    Vertex ids are inferred; ``pairs`` lists (edge_id, edge_id) tuples to
    mark as bidirected pairs. Vertex weights/filters are placeholders.
    """
    vids = set()
    for s, t, _, _ in edge_spec:
        vids.update((s, t))
    if n is not None:
        vids.update(range(n))
    vertices = [Vertex(v, 0.0, (0.0,) * h) for v in sorted(vids)]
    pair_of = {}
    for a, b in pairs:
        pair_of[a] = b
        pair_of[b] = a
    edges = [
        Edge(i, s, t, float(w), sig, pair_of.get(i))
        for i, (s, t, w, sig) in enumerate(edge_spec)
    ]
    return SearchGraph(vertices, edges, h, rule, tau)


def chain_graph(weights, sig="1", h=1):
    """A single directed chain 0 -> 1 -> ... with the given edge weights."""
    return make_graph([(i, i + 1, w, sig) for i, w in enumerate(weights)], h=h)


@pytest.fixture
def chain3():
    return chain_graph([1.0, 1.0, 1.0])
