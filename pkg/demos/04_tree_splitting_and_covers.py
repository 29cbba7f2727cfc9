"""Split trees into induced stars and cover patterns with edges plus a star.

Run: python3 demos/04_tree_splitting_and_covers.py
"""
import random

import excount as ec

rng = random.Random(7)

# random tree on 10 vertices: every tree splits into induced stars
n = 10
T = ec.make_graph(n, [(rng.randrange(v), v) for v in range(1, n)])
sp = ec.star_partition(T)
print(f"tree edges: {T.sorted_edges()}")
for part, center in zip(sp.parts, sp.centers):
    leaves = sorted(part - {center})
    print(f"  star at {center} with leaves {leaves}")
print(f"star factor profile of the tree: {ec.star_factor_profile(T)}")
print()

# the profile of a pattern bounds its injective homomorphism count
H = ec.cycle_graph(6)
G = ec.quasi_clique(9, 30)
profile = ec.star_factor_profile(H)
bound = 1
for a in profile:
    bound *= ec.inj_homs(ec.star_graph(a), G)
print(f"C6 profile {profile}: h(C6, G) = {ec.inj_homs(H, G)} <= {bound}")
print()

# which bipartite patterns admit a matching-plus-star cover?
for name, B in (
    ("P4", ec.path_graph(4)),
    ("K_{2,3}", ec.complete_bipartite(2, 3)),
    ("K_{3,4}", ec.complete_bipartite(3, 4)),
    ("C6", ec.cycle_graph(6)),
):
    cover = ec.edge_star_cover(B)
    if cover is None:
        print(f"{name}: no cover")
    elif cover.star is None:
        print(f"{name}: perfect matching {sorted(cover.matching)}")
    else:
        center, leaves = cover.star
        print(
            f"{name}: star at {center} over {sorted(leaves)}"
            f" plus edges {sorted(cover.matching)}"
        )
