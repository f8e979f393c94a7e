"""Acceptance suite: one test per release criterion, at stated tolerances.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one PASS line
per criterion; any assertion failure marks the criterion FAILED.
"""

import json
import math
import random
import time
from itertools import permutations

import pytest

from mapperpaths import (
    brute_force_k_ip,
    brute_force_max_ip,
    build_score_table,
    directed_cycle,
    gen_dir_hc,
    gen_random_dag,
    gen_x3c,
    gen_xkc,
    greedy_ip,
    greedy_k_ip,
    ip_bounds,
    load_graph,
    max_ip,
    max_ip_sparse,
    score,
    two_ip,
    validate_path,
)
from mapperpaths.cli import main

from conftest import chain_graph, make_graph

TOL = 1e-9
LOG24 = math.log(24)


def _passed(name: str) -> None:
    print(f"ACCEPTANCE {name}: PASS")


def _oracle_corpus():
    """200 seeded random DAGs: n <= 10, densities {0.2, 0.5, 0.9}, 1-4 sigs."""
    for idx in range(200):
        yield gen_random_dag(
            n=2 + idx % 9,
            density=(0.2, 0.5, 0.9)[idx % 3],
            signature_count=1 + idx % 4,
            seed=idx,
        )


def test_oracle_equivalence_max_ip():
    started = time.perf_counter()
    checked = 0
    for g in _oracle_corpus():
        dense = max_ip(g)
        sparse = max_ip_sparse(g)
        oracle = brute_force_max_ip(g, max_edges=max(24, g.m))
        if oracle is None:
            assert dense is None and sparse is None
        else:
            assert abs(dense.score - oracle.score) <= TOL
            assert abs(sparse.score - oracle.score) <= TOL
            assert dense.edge_ids == oracle.edge_ids
            assert sparse.edge_ids == oracle.edge_ids
        checked += 1
    elapsed = time.perf_counter() - started
    assert checked == 200
    assert elapsed < 30.0, f"corpus took {elapsed:.1f}s"
    _passed(f"oracle-equivalence (200 DAGs in {elapsed:.1f}s)")


def test_proof_constants_hamiltonian_reduction():
    for n in (3, 4, 5):
        g = gen_dir_hc(directed_cycle(n))
        best = brute_force_max_ip(g)
        target = math.log(math.factorial(n + 1))
        assert abs(best.score - target) <= TOL
        assert abs(g.meta["s0"] - target) <= TOL
    assert abs(
        brute_force_max_ip(gen_dir_hc(directed_cycle(4))).score - math.log(120)
    ) <= TOL
    # No Hamiltonian cycle: two disjoint 2-cycles.
    g = gen_dir_hc([(0, 1), (1, 0), (2, 3), (3, 2)], n=4)
    assert brute_force_max_ip(g).score < g.meta["s0"] - TOL
    _passed("proof-constants (log((n+1)!) for n in 3..5, non-Hamiltonian below)")


def test_gadget_accounting():
    single = gen_x3c([(0, 1, 2)], q=1)
    coll = brute_force_k_ip(single, 3)
    assert len(coll.paths) == 4
    assert abs(coll.total_score - 4 * LOG24) <= TOL

    for sets in ([(0, 1, 2), (3, 4, 5)], [(0, 1, 2), (3, 4, 5), (0, 2, 4)]):
        g = gen_x3c(sets, q=2)
        p = len(sets)
        s0 = p * g.meta["w_out"] + 3 * (p - 1) * 2 * math.log(2) + 2 * LOG24
        assert abs(g.meta["s0"] - s0) <= TOL
        total = brute_force_k_ip(g, 3, max_edges=40).total_score
        assert abs(total - s0) <= TOL

    for k in (3, 4, 5):
        g = gen_xkc(k, [tuple(range(k)), tuple(range(k, 2 * k))], q=2)
        assert g.n <= (k * (k + 1) + 1) * 2
        assert g.m <= k * (k + 1) * 2
    _passed("gadget-accounting (planted covers hit s0; structural bounds k=3..5)")


def test_two_ip_exactness():
    checked = 0
    for seed in range(100):
        g = gen_random_dag(3 + seed % 4, 0.6, signature_count=1 + seed % 3, seed=seed)
        if g.m > 8:
            g = g.subgraph(sorted(g.edges)[:8])
        exact = brute_force_k_ip(g, 2).total_score if g.n >= 3 else 0.0
        assert abs(two_ip(g).total_score - exact) <= TOL
        checked += 1
    assert checked == 100
    _passed("two-ip-exactness (100 graphs, m <= 8)")


def _decomposition_fixtures():
    yield chain_graph([1, 1, 1])
    yield chain_graph([3.0, 1.0, 2.0, 0.5])
    yield make_graph([(0, 2, 1.0, "1"), (1, 2, 1.0, "1"), (2, 3, 1.0, "1")])
    yield make_graph([(0, 1, 1.0, "1"), (1, 2, 1.0, "0"), (1, 3, 2.0, "1")])
    yield gen_x3c([(0, 1, 2)], q=1)
    yield gen_x3c([(0, 1, 2), (3, 4, 5)], q=2)
    yield gen_xkc(4, [(0, 1, 2, 3)], q=1)
    yield make_graph([], n=3)


def test_decomposition_invariants():
    graphs = list(_decomposition_fixtures())
    graphs += [
        gen_random_dag(4 + seed % 7, (0.3, 0.5)[seed % 2], 1 + seed % 3, seed=500 + seed)
        for seed in range(100)
    ]
    for g in graphs:
        full = greedy_ip(g)
        covered = sorted(eid for p in full.paths for eid in p.edge_ids)
        assert covered == sorted(g.edges)

        bounds = ip_bounds(g)
        assert bounds.lower - TOL <= full.total_score <= bounds.upper + TOL

        if g.n >= 3:
            k = 2
            kcoll = greedy_k_ip(g, k)
            used = [eid for p in kcoll.paths for eid in p.edge_ids]
            assert len(used) == len(set(used))
            assert all(len(p) == k for p in kcoll.paths)
            # Termination: no k-edge interesting path remains.
            remaining = set(g.edges) - set(used)
            leftover = build_score_table(g, edge_ids=remaining, max_length=k, sparse=True)
            from mapperpaths import best_path
            assert best_path(leftover, min_length=k, max_length=k) is None

        table = build_score_table(g, sparse=True)
        assert table.rounds <= (g.diameter or 0) + 1
    _passed(f"decomposition-invariants ({len(graphs)} graphs)")


def test_scoring_properties():
    rng = random.Random(99)
    # Homogeneity of the score function, including c = 0.
    for _ in range(50):
        weights = [rng.uniform(0, 10) for _ in range(rng.randint(1, 8))]
        for c in (0.0, 0.5, 2.0, 7.0):
            assert score([c * w for w in weights]) == pytest.approx(
                c * score(weights), abs=1e-9, rel=1e-9
            )
    # Argmax path invariant under positive uniform scaling.
    base = gen_random_dag(9, 0.5, signature_count=2, seed=77)
    p0 = max_ip(base)
    for c in (0.5, 2.0, 7.0):
        from mapperpaths import Edge, SearchGraph

        scaled = SearchGraph(
            base.vertices.values(),
            [
                Edge(e.id, e.source, e.target, c * e.weight, e.signature, e.pair_id)
                for e in base.edges.values()
            ],
            base.h,
        )
        pc = max_ip(scaled)
        assert pc.edge_ids == p0.edge_ids
        assert pc.score == pytest.approx(c * p0.score, rel=1e-9)
    # Prefix monotonicity along a concrete optimum.
    for cut in range(1, len(p0)):
        prefix = validate_path(base, list(p0.edge_ids[:cut]))
        assert prefix.score <= p0.score + TOL
    # Rearrangement: ascending order maximizes, exhaustively for k <= 6.
    for k in range(1, 7):
        for _ in range(10):
            weights = [rng.uniform(0, 5) for _ in range(k)]
            best = max(score(list(p)) for p in permutations(weights))
            assert score(sorted(weights)) == pytest.approx(best, abs=TOL)
    _passed("scoring-properties (homogeneity, prefix, rearrangement)")


def test_performance_smoke():
    g = gen_random_dag(5000, 0.008, signature_count=4, weight_range=(0.0, 1.0), seed=20)
    assert 95_000 <= g.m <= 105_000
    started = time.perf_counter()
    table = build_score_table(g, sparse=True)
    from mapperpaths import best_path

    path = best_path(table)
    elapsed = time.perf_counter() - started
    assert path is not None
    assert elapsed < 10.0, f"sparse solver took {elapsed:.1f}s"
    dense_cells = g.m * (g.n - 1)
    stored = table.cell_count
    assert stored < dense_cells / 100
    _passed(
        f"performance-smoke (n={g.n}, m={g.m}: {elapsed:.1f}s, "
        f"{stored} cells vs dense {dense_cells})"
    )


def _write_planted_cloud(path):
    """50 points on a rising trend: f1 climbs, f2 falls, target climbs.

    Ten groups of five points; one bridge point per consecutive group
    pair sits in the cover overlap, chaining the clusters. The resolved
    signature of the planted chain is "10".
    """
    intervals, overlap, lo, hi = 10, 0.2, 0.0, 10.0
    width = (hi - lo) / (intervals - (intervals - 1) * overlap)
    step = width * (1 - overlap)
    rows = []
    for i in range(10):
        mid = lo + i * step + width / 2
        if i == 0:
            cores = [lo, mid - 0.03, mid + 0.03, mid + 0.1]
        elif i == 9:
            cores = [mid - 0.1, mid - 0.03, mid + 0.03, mid + 0.1, hi]
        else:
            cores = [mid - 0.1, mid - 0.03, mid + 0.03, mid + 0.1]
        for c, f1 in enumerate(cores):
            rows.append((f1, i + 0.01 * c))
        if i < 9:
            bridge = mid + step / 2  # midpoint of the overlap with bin i+1
            rows.append((bridge, i + 0.05))
    assert len(rows) == 50
    lines = ["id,f1,f2,g"]
    for pid, (f1, g) in enumerate(rows):
        lines.append(f"{pid},{f1:.6f},{10.0 - f1:.6f},{g:.6f}")
    path.write_text("\n".join(lines) + "\n")


def test_end_to_end_planted_trend(tmp_path):
    csv_path = tmp_path / "cloud.csv"
    _write_planted_cloud(csv_path)
    sk_path = tmp_path / "skeleton.json"
    graph_path = tmp_path / "graph.json"
    report_path = tmp_path / "report.json"

    assert main([
        "build", "--points", str(csv_path), "--filter-cols", "f1,f2",
        "--target-col", "g", "--intervals", "10,1", "--overlap", "0.2,0",
        "--gap", "1.0", "--out", str(sk_path),
    ]) == 0
    assert main([
        "graph", "--skeleton", str(sk_path), "--rule", "a", "--out", str(graph_path),
    ]) == 0
    assert main([
        "max-ip", "--graph", str(graph_path), "--out", str(report_path),
    ]) == 0

    g = load_graph(graph_path)
    assert g.is_dag and g.n == 10 and g.m == 9

    report = json.loads(report_path.read_text())
    (path,) = report["paths"]
    assert len(path["edges"]) == 9
    assert path["signature"] == "10"

    # The planted chain is the unique maximum: the oracle agrees edge for
    # edge, and every other interesting path scores strictly less.
    oracle = brute_force_max_ip(g)
    assert list(oracle.edge_ids) == path["edges"]
    assert oracle.score == pytest.approx(path["score"], abs=TOL)
    from mapperpaths import enumerate_interesting_paths

    runner_up = max(
        (s for seq, s, _ in enumerate_interesting_paths(g) if list(seq) != path["edges"]),
        default=0.0,
    )
    assert runner_up < oracle.score - TOL
    _passed("end-to-end (CSV -> build -> graph -> max-ip recovers signature 10)")
