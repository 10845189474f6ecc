"""Four-point delta on small graphs: exact scans, sampling, witnesses.

Walks through the basic measurement pipeline: build a graph, take all-pairs
BFS distances, run the exact quadruple scan, and compare with the sampled
estimator.  Trees sit at delta 0, cycles near diameter/2, which brackets
the tree-likeness scale.
"""

import numpy as np

from hypgraph import (Graph, all_pairs, exact_delta, four_point_delta,
                      sampled_delta)


def show(name, g):
    m = all_pairs(g)
    exact = exact_delta(m)
    est = sampled_delta(m, 20_000, seed=0)
    print(f"{name:>14s}: n={g.n:3d} diameter={m.diameter:3d} "
          f"delta={exact.two_delta / 2:<5} witness={exact.witness} "
          f"sampled={est.two_delta / 2}")
    assert est.two_delta <= exact.two_delta


print("delta = (largest pairing sum - median pairing sum) / 2, maximized")
print("over vertex quadruples; stored doubled so comparisons stay integral.")
print()

# a single quadruple by hand: the four corners of a 4-cycle
dist = [[0, 1, 2, 1], [1, 0, 1, 2], [2, 1, 0, 1], [1, 2, 1, 0]]
val = four_point_delta(dist[0][2], dist[1][3], dist[0][1],
                       dist[2][3], dist[0][3], dist[2][1])
print(f"C4 quadruple (0,2,1,3): doubled value {val} -> delta 1.0")
print()

rng = np.random.default_rng(7)
tree_edges = [(int(rng.integers(0, i)), i) for i in range(1, 60)]
show("random tree", Graph(60, tree_edges))
show("cycle C32", Graph(32, [(i, (i + 1) % 32) for i in range(32)]))
show("cycle C8", Graph(8, [(i, (i + 1) % 8) for i in range(8)]))

# delta never exceeds half the diameter
g = Graph(40, [(i, (i + 1) % 40) for i in range(40)])
m = all_pairs(g)
r = exact_delta(m)
print(f"\nC40: delta {r.two_delta / 2} <= diameter/2 = {m.diameter / 2}")
