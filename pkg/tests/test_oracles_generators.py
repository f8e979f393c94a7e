import math

import pytest

from mapperpaths import (
    InputError,
    ParameterError,
    SizeError,
    brute_force_ip,
    brute_force_k_ip,
    brute_force_max_ip,
    directed_cycle,
    gen_dir_hc,
    gen_random_dag,
    gen_x3c,
    gen_xkc,
    greedy_k_ip,
    max_ip,
    xkc_constants,
)

from conftest import chain_graph, make_graph

LOG2, LOG24 = math.log(2), math.log(24)


# ------------------------------------------------------------ brute force

def test_oracle_matches_max_ip_on_dag_fixtures():
    for g in [
        chain_graph([1, 2, 3]),
        make_graph([(0, 1, 1.0, "1"), (1, 2, 1.0, "0"), (1, 3, 2.0, "1")]),
    ]:
        a, b = max_ip(g), brute_force_max_ip(g)
        assert a.edge_ids == b.edge_ids and a.score == b.score


def test_oracle_on_rule_b_two_cycle():
    g = make_graph(
        [(0, 1, 1.0, "*"), (1, 0, 1.0, "*")], rule="b", tau=2.0, pairs=[(0, 1)]
    )
    p = brute_force_max_ip(g)
    assert len(p) == 1
    assert p.score == pytest.approx(LOG2)


def test_oracle_empty_graph():
    assert brute_force_max_ip(make_graph([], n=2)) is None


def test_oracle_size_guard():
    g = gen_random_dag(12, 0.9, seed=0)
    assert g.m > 24
    with pytest.raises(SizeError):
        brute_force_max_ip(g)
    assert brute_force_max_ip(g, max_edges=g.m) is not None


def test_brute_force_ip_chain3():
    coll = brute_force_ip(chain_graph([1, 1, 1]))
    assert len(coll.paths) == 1
    assert coll.total_score == pytest.approx(LOG24)


def test_brute_force_k_ip_distinct_sigs_empty():
    g = make_graph([(0, 1, 1.0, "1"), (1, 2, 1.0, "0")])
    coll = brute_force_k_ip(g, 2)
    assert coll.paths == () and coll.total_score == 0.0


def test_brute_force_guards():
    g = gen_random_dag(10, 0.5, seed=1)
    if g.m > 12:
        with pytest.raises(SizeError):
            brute_force_k_ip(g, 2)
        with pytest.raises(SizeError):
            brute_force_ip(g)


# --------------------------------------------------- Hamiltonian reduction

@pytest.mark.parametrize("n", [3, 4, 5])
def test_directed_cycle_instance_scores_log_factorial(n):
    g = gen_dir_hc(directed_cycle(n))
    assert g.n == n + 1 and g.m == n
    p = brute_force_max_ip(g)
    s0 = math.log(math.factorial(n + 1))
    assert g.meta["s0"] == pytest.approx(s0, abs=1e-12)
    assert p.score == pytest.approx(s0, abs=1e-9)


def test_four_cycle_value():
    p = brute_force_max_ip(gen_dir_hc(directed_cycle(4)))
    assert p.score == pytest.approx(math.log(120), abs=1e-9)
    assert p.score == pytest.approx(4.787491742782046, abs=1e-9)


def test_non_hamiltonian_digraph_scores_below_target():
    # Two disjoint 2-cycles: no Hamiltonian cycle.
    edges = [(0, 1), (1, 0), (2, 3), (3, 2)]
    g = gen_dir_hc(edges, n=4)
    p = brute_force_max_ip(g)
    assert p.score < g.meta["s0"] - 1e-9


def test_dense_non_hamiltonian_scores_below_target():
    # Complete bipartite orientation K_{1,3}-ish star digraph: no HC.
    edges = [(0, 1), (0, 2), (0, 3), (1, 0), (2, 0), (3, 0)]
    g = gen_dir_hc(edges, n=4)
    assert brute_force_max_ip(g).score < g.meta["s0"] - 1e-9


def test_dir_hc_rejects_bad_inputs():
    with pytest.raises(ParameterError):
        gen_dir_hc([(0, 1)], n=2)
    with pytest.raises(InputError):
        gen_dir_hc([(0, 0), (1, 2), (2, 0)], n=3)
    with pytest.raises(InputError):
        gen_dir_hc([(0, 1), (0, 1), (1, 2), (2, 0)], n=3)


# -------------------------------------------------------- exact-cover gadgets

def test_single_gadget_structure_and_value():
    g = gen_x3c([(0, 1, 2)], q=1)
    assert g.n == 13 and g.m == 12
    assert g.is_dag
    coll = brute_force_k_ip(g, 3)
    assert len(coll.paths) == 4
    assert coll.total_score == pytest.approx(4 * LOG24, abs=1e-9)
    assert g.meta["w_in"] == pytest.approx(4 * LOG24, abs=1e-12)
    assert g.meta["w_out"] == pytest.approx(3 * LOG24, abs=1e-12)


def test_single_gadget_greedy_attains_oracle():
    g = gen_x3c([(0, 1, 2)], q=1)
    greedy = greedy_k_ip(g, 3)
    assert greedy.total_score == pytest.approx(4 * LOG24, abs=1e-9)


def test_planted_cover_reaches_target_exactly():
    for sets in ([(0, 1, 2), (3, 4, 5)], [(0, 1, 2), (3, 4, 5), (0, 2, 4)]):
        g = gen_x3c(sets, q=2)
        coll = brute_force_k_ip(g, 3, max_edges=40)
        assert coll.total_score == pytest.approx(g.meta["s0"], abs=1e-9)


def test_no_exact_cover_stays_below_target():
    # Every pair of sets overlaps, so no two of them cover all 6 elements.
    sets = [(0, 1, 2), (2, 3, 4), (0, 4, 5)]
    assert not any(
        set(a).isdisjoint(b) for i, a in enumerate(sets) for b in sets[i + 1:]
    )
    g = gen_x3c(sets, q=2)
    coll = brute_force_k_ip(g, 3, max_edges=40)
    assert coll.total_score < g.meta["s0"] - 1e-9


@pytest.mark.parametrize("k", [3, 4, 5])
def test_xkc_structural_bounds(k):
    p_sets = [tuple(range(k)), tuple(range(k, 2 * k))]
    g = gen_xkc(k, p_sets, q=2)
    p = len(p_sets)
    assert g.n <= (k * (k + 1) + 1) * p
    assert g.m <= k * (k + 1) * p
    single = gen_xkc(k, [tuple(range(k))], q=1)
    assert single.n == k * (k + 1) + 1
    assert single.m == k * (k + 1)


def test_xkc_k4_single_gadget_edge_count():
    g = gen_xkc(4, [(0, 1, 2, 3)], q=1)
    assert g.m == 20


def test_xkc_constants_formulas():
    c = xkc_constants(3, p=1, q=1)
    assert c["w_in"] == pytest.approx(4 * LOG24)
    assert c["w_out"] == pytest.approx(3 * LOG24)
    c = xkc_constants(4, p=3, q=2)
    log120 = math.log(math.factorial(5))
    assert c["w_in"] == pytest.approx(5 * log120 + 4 * 2 * LOG2)
    assert c["w_out"] == pytest.approx(4 * log120)
    assert c["s0"] == pytest.approx(3 * c["w_out"] + 4 * 2 * 2 * LOG2 + 2 * log120)


def test_xkc_validates_inputs():
    with pytest.raises(ParameterError):
        gen_xkc(2, [(0, 1)], q=1)
    with pytest.raises(ParameterError):
        gen_x3c([], q=1)
    with pytest.raises(InputError):
        gen_x3c([(0, 1, 1)], q=1)
    with pytest.raises(InputError):
        gen_x3c([(0, 1, 9)], q=1)
    with pytest.raises(InputError):
        gen_x3c([(0, 1, 2), (0, 1, 2)], q=2)


# ------------------------------------------------------------- random DAGs

def test_random_dag_deterministic_per_seed():
    a = gen_random_dag(12, 0.4, signature_count=3, seed=42)
    b = gen_random_dag(12, 0.4, signature_count=3, seed=42)
    assert [(e.source, e.target, e.weight, e.signature) for e in a.edges.values()] == [
        (e.source, e.target, e.weight, e.signature) for e in b.edges.values()
    ]
    c = gen_random_dag(12, 0.4, signature_count=3, seed=43)
    assert [(e.source, e.target) for e in a.edges.values()] != [
        (e.source, e.target) for e in c.edges.values()
    ]


def test_random_dag_density_one_single_signature_is_complete():
    # With equal weights the optimum of a complete DAG is a Hamiltonian
    # topological chain (appending or inserting a rank always helps).
    # With nonconstant weights that is false: an insertion swaps one edge
    # for two different-weight ones, and the oracle finds shorter optima.
    for n in (4, 5, 6, 7):
        g = gen_random_dag(n, 1.0, signature_count=1, weight_range=(1.0, 1.0), seed=5)
        assert g.m == n * (n - 1) // 2
        p = max_ip(g)
        assert len(p) == n - 1
        assert brute_force_max_ip(g).score == pytest.approx(p.score, abs=1e-12)
        assert p.score == pytest.approx(math.log(math.factorial(n)), abs=1e-9)


def test_random_dag_single_vertex_is_edgeless():
    g = gen_random_dag(1, 0.5, seed=0)
    assert g.n == 1 and g.m == 0


def test_random_dag_is_always_a_dag():
    for seed in range(5):
        assert gen_random_dag(15, 0.6, signature_count=2, seed=seed).is_dag


def test_random_dag_parameter_checks():
    with pytest.raises(ParameterError):
        gen_random_dag(0, 0.5)
    with pytest.raises(ParameterError):
        gen_random_dag(5, 0.0)
    with pytest.raises(ParameterError):
        gen_random_dag(5, 0.5, weight_range=(-1.0, 1.0))
