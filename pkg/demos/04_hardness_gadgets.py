"""Reduction gadgets as test instances with exact score targets.

Splitting one vertex of a digraph yields an instance whose best simple
path scores log((n+1)!) exactly when a directed Hamiltonian cycle
exists. The exact-cover family ties the optimal 3-edge decomposition
total to s0 exactly when the planted set system has an exact cover.
"""

import math

from mapperpaths import (
    brute_force_k_ip,
    brute_force_max_ip,
    directed_cycle,
    gen_dir_hc,
    gen_x3c,
)

print("Hamiltonian-cycle split instances")
for n in (3, 4, 5):
    g = gen_dir_hc(directed_cycle(n))
    best = brute_force_max_ip(g)
    print(f"  n={n}: score {best.score:.6f}  target log({n + 1}!) = {g.meta['s0']:.6f}")

broken = gen_dir_hc([(0, 1), (1, 0), (2, 3), (3, 2)], n=4)
print(f"  no Hamiltonian cycle: {brute_force_max_ip(broken).score:.4f} "
      f"< target {broken.meta['s0']:.4f}")

print("\nexact-3-cover instances (q=2 planted cover)")
for sets in ([(0, 1, 2), (3, 4, 5)], [(0, 1, 2), (3, 4, 5), (0, 2, 4)]):
    g = gen_x3c(sets, q=2)
    total = brute_force_k_ip(g, 3, max_edges=40).total_score
    print(f"  p={len(sets)}: 3-IP total {total:.6f}  s0 {g.meta['s0']:.6f}  "
          f"match={abs(total - g.meta['s0']) < 1e-9}")

no_cover = gen_x3c([(0, 1, 2), (2, 3, 4), (0, 4, 5)], q=2)
total = brute_force_k_ip(no_cover, 3, max_edges=40).total_score
print(f"  no exact cover: total {total:.6f} < s0 {no_cover.meta['s0']:.6f}")

single = gen_x3c([(0, 1, 2)], q=1)
print(f"\nsingle set object: |V|={single.n} |E|={single.m}, "
      f"4 disjoint 3-paths total {brute_force_k_ip(single, 3).total_score:.6f} "
      f"= 4*log(24) = {4 * math.log(24):.6f}")
