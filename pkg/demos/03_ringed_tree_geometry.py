"""Ringed-tree geometry: canonical geodesics, slim triangles, disk embedding.

The ringed tree is the hero structure: constant hyperbolicity realized by
canonical geodesics (up, across <= 3 ring hops, down), and a concrete
embedding into the hyperbolic disk whose distances track graph distances
within fixed additive/multiplicative constants.
"""

import numpy as np

from hypgraph import (addr_of, all_pairs, canonical_geodesic, exact_delta,
                      gen_ringed_tree, poincare_distance, poincare_embed,
                      triangle_slimness, verify_quasi_isometry)

K = 7
g, addr = gen_ringed_tree(K)
m = all_pairs(g)
print(f"RT({K}): n={g.n}, edges={g.edge_count}, diameter={m.diameter}")

r = exact_delta(m)
print(f"exact delta = {r.two_delta / 2} (witness {r.witness}) "
      f"-- flat wrt diameter, the tree is 'constantly hyperbolic'")

# canonical geodesic between two far-apart leaves: up, across, down
u, v = (K - 1, 3), (K - 1, 44)
path = canonical_geodesic(K, u, v)
levels = [addr_of(x)[0] for x in path]
print(f"\ncanonical geodesic {u} -> {v}: levels {levels}")

# canonical triangles stay 3-slim
rng = np.random.default_rng(1)
worst = 0
for _ in range(2000):
    a, b, c = (rng.random(3) * g.n).astype(int)
    rep = triangle_slimness(g, m, (
        canonical_geodesic(K, addr_of(int(a)), addr_of(int(b))),
        canonical_geodesic(K, addr_of(int(b)), addr_of(int(c))),
        canonical_geodesic(K, addr_of(int(c)), addr_of(int(a)))))
    worst = max(worst, rep.slimness)
print(f"worst canonical-triangle slimness over 2000 samples: {worst} (<= 3)")

# the disk embedding: radius approaches 1 level by level, angles split
print("\ndisk embedding (level, pos) -> complex point:")
for a in ((0, 0), (1, 0), (2, 1), (6, 17)):
    z = poincare_embed(a)
    print(f"  {a} -> {z.real:+.4f}{z.imag:+.4f}i   |z|={abs(z):.4f}")

d_rt = int(m.dist[0, 2**(K - 1) - 1])
d_p = poincare_distance(poincare_embed((0, 0)), poincare_embed((K - 1, 0)))
print(f"\nroot->leaf: graph distance {d_rt}, disk distance {d_p:.3f}")

rep = verify_quasi_isometry(K)
print(f"two-sided envelope over all {rep.pairs} pairs: "
      f"{rep.violations} violations "
      f"(margins {rep.worst_lower_margin:.2f} / {rep.worst_upper_margin:.2f})")
