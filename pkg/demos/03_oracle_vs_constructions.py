"""Exhaustive maxima against the constructions, and the bipartite surprise.

Run: python3 demos/03_oracle_vs_constructions.py
"""
from math import comb

import excount as ec

S2 = ec.star_graph(2)

# general hosts: the maximum is always one of the two families
print("2-leaf stars over all 6-vertex hosts:")
print(f"{'e':>3} {'oracle':>7} {'clique':>7} {'star':>7}")
for e in range(0, comb(6, 2) + 1, 3):
    rec = ec.ex_oracle(6, e, S2)
    clique = ec.count_stars(ec.quasi_clique(6, e), 2)
    star = ec.count_stars(ec.quasi_star(6, e), 2)
    print(f"{e:>3} {rec.maximum:>7} {clique:>7} {star:>7}")
print()

# bipartite hosts: more edges can mean strictly fewer stars
first, second = ec.nonmonotonicity_demo()
print(f"bipartite maxima at n=8: e=12 gives {first}, e=13 gives {second}")
rec = ec.ex_bip_oracle(8, 12, S2)
print(f"12-edge witness degrees: {sorted(rec.witnesses[0].degrees, reverse=True)}"
      " (a complete bipartite graph on every allowed vertex)")
print()

# triangle-free hosts against the bipartite construction
P4 = ec.path_graph(4)
print("P4 over triangle-free 6-vertex hosts:")
print(f"{'e':>3} {'oracle':>7} {'bipartite construction':>23}")
for e in (4, 6, 8):
    rec = ec.ex_trifree_oracle(6, e, P4)
    c = ec.count_copies(P4, ec.quasi_complete_bipartite(6, e))
    print(f"{e:>3} {rec.maximum:>7} {c:>23}")
