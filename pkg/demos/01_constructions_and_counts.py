"""Build the three extremal families and count patterns in them.

Run: python3 demos/01_constructions_and_counts.py
"""
from math import comb

import excount as ec

n, e = 10, 23

clique = ec.quasi_clique(n, e)
star = ec.quasi_star(n, e)
bip = ec.quasi_complete_bipartite(n, e)

print(f"budget: n={n}, e={e} (complete graph would have {comb(n, 2)} edges)")
print(f"quasi-clique degrees:    {sorted(clique.degrees, reverse=True)}")
print(f"quasi-star degrees:      {sorted(star.degrees, reverse=True)}")
print(f"quasi-bipartite degrees: {sorted(bip.degrees, reverse=True)}")
print()

for k in (2, 3, 4):
    print(
        f"{k}-leaf stars:  clique {ec.count_stars(clique, k):>6}"
        f"  star {ec.count_stars(star, k):>6}"
        f"  bipartite {ec.count_stars(bip, k):>6}"
    )
print()

for name, pattern in (("P4", ec.path_graph(4)), ("K3", ec.complete_graph(3)),
                      ("C4", ec.cycle_graph(4))):
    print(
        f"copies of {name}:  clique {ec.count_copies(pattern, clique):>6}"
        f"  star {ec.count_copies(pattern, star):>6}"
        f"  bipartite {ec.count_copies(pattern, bip):>6}"
    )
print()

# the two families trade places as the edge budget grows
scan = ec.crossover_scan(2, n)
print(f"2-leaf star crossover at n={n}: clique takes over at e={scan.crossover_e}"
      f" of {comb(n, 2)}")
