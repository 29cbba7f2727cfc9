"""Watch a bipartite graph being rewritten into the extremal shape.

Run: python3 demos/02_diagram_rewrite.py
"""
import random

import excount as ec

rng = random.Random(2024)

# a scrambled bipartite graph on 12 vertices
n, p = 12, 4
pairs = [(a, b) for a in range(p) for b in range(p, n)]
G = ec.make_graph(n, rng.sample(pairs, 19))

endpoint, trace = ec.run_transformation(G, k=2)

print(f"host: n={n}, e={G.edge_count}, starting 2-star count "
      f"{trace.entries[0].stars_2}")
print(f"{'step':>4}  {'kind':<6} {'stars_2':>7}  columns")
for idx, entry in enumerate(trace.entries):
    cols = " ".join(str(c) for c in entry.columns)
    print(f"{idx:>4}  {entry.kind:<6} {entry.stars_2:>7}  {cols}")

target = ec.quasi_complete_bipartite(n, G.edge_count)
print()
print(f"endpoint isomorphic to the quasi-complete bipartite graph: "
      f"{ec.are_isomorphic(endpoint, target)}")
print(f"final 2-star count {ec.count_stars(endpoint, 2)} "
      f"(construction: {ec.count_stars(target, 2)})")
