"""From a raw point cloud to a weighted, signed search graph.

Synthesizes 60 points whose target value g rises while the first filter
rises and the second falls, builds the Mapper skeleton (interval cover +
single-linkage on g), then directs the links by ascending g-mean.
"""

import math

from mapperpaths import CoverSpec, Point, PointCloud, build_skeleton, skeleton_to_search_graph

# A drifting trend with some jitter: f1 climbs, f2 falls, g climbs.
points = []
for i in range(60):
    t = i / 59
    f1 = 10 * t + 0.3 * math.sin(9 * t)
    f2 = 10 - 10 * t + 0.2 * math.cos(7 * t)
    g = 5 * t + 0.2 * math.sin(20 * t)
    points.append(Point(i, (f1, f2), g))
cloud = PointCloud(tuple(points))

cover = CoverSpec(interval_counts=(8, 1), overlaps=(0.25, 0.0))
skeleton = build_skeleton(cloud, cover, gap=0.4)
print(f"skeleton: {len(skeleton.clusters)} clusters, {len(skeleton.links)} links")
for c in skeleton.clusters[:4]:
    print(f"  cluster {c.id}: {len(c.member_ids)} points, "
          f"g-mean {c.g_mean:.3f}, filter means {tuple(round(f, 2) for f in c.filter_means)}")
print("  ...")

graph = skeleton_to_search_graph(skeleton, rule="a")
print(f"\nsearch graph: n={graph.n} m={graph.m} dag={graph.is_dag} "
      f"diameter={graph.diameter} max-indegree={graph.max_indegree}")
print(f"distinct signatures: {graph.signatures}")
print("\nfirst edges (source -> target, weight, signature):")
for e in list(graph.edges.values())[:6]:
    print(f"  {e.source} -> {e.target}   w={e.weight:.3f}  sig={e.signature}")

# Rule b with a cutoff turns near-flat links into bidirected wildcard pairs.
graph_b = skeleton_to_search_graph(skeleton, rule="b", tau=0.15)
pairs = sum(1 for e in graph_b.edges.values() if e.pair_id is not None) // 2
print(f"\nrule b (tau=0.15): m={graph_b.m}, bidirected pairs={pairs}, dag={graph_b.is_dag}")
