"""Edge-disjoint decompositions: exact 1- and 2-edge solvers, greedy rest.

The full decomposition must cover every edge exactly once; the k-edge
variant may leave edges uncovered but every chosen path has k edges.
Lower and upper bounds sandwich whatever the greedy heuristic returns.
"""

from mapperpaths import (
    at_least_k_ip,
    gen_random_dag,
    greedy_ip,
    greedy_k_ip,
    ip_bounds,
    one_ip,
    two_ip,
)

g = gen_random_dag(n=30, density=0.12, signature_count=2, weight_range=(0.1, 1.5), seed=8)
print(f"random DAG: n={g.n} m={g.m} diameter={g.diameter}")

ones = one_ip(g)
print(f"\n1-edge decomposition: {len(ones.paths)} paths, total {ones.total_score:.4f}")

twos = two_ip(g)
print(f"2-edge decomposition (exact, matching): {len(twos.paths)} paths, "
      f"total {twos.total_score:.4f}, covered {twos.covered_edge_count}/{g.m} edges")

bounds = ip_bounds(g)
full = greedy_ip(g)
print(f"\ngreedy full decomposition: {len(full.paths)} paths, total {full.total_score:.4f}")
print(f"  bounds sandwich: {bounds.lower:.4f} <= {full.total_score:.4f} <= {bounds.upper:.4f}")
print(f"  path lengths: {sorted((len(p) for p in full.paths), reverse=True)}")

for k in (2, 3):
    kc = greedy_k_ip(g, k)
    print(f"\ngreedy {k}-edge decomposition: {len(kc.paths)} paths, "
          f"total {kc.total_score:.4f}, covered {kc.covered_edge_count}/{g.m}")

atl = at_least_k_ip(g, 3)
print(f"\nat-least-3 decomposition: {len(atl.paths)} paths, "
      f"lengths {sorted((len(p) for p in atl.paths), reverse=True)}")

top = greedy_ip(g, max_paths=3)
print(f"\ntop-3 early stop: {[round(p.score, 3) for p in top.paths]}")
