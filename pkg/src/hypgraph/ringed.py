"""Ringed-tree addressing, canonical geodesics, disk embedding, verifiers.

Vertices of a k-level ringed tree are addressed by (level, position) with
id = 2**level - 1 + position.  The canonical geodesic between two vertices
climbs toward the root, crosses at most three ring edges, and descends; it
is the deterministic representative used by all structural checks here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import all_pairs, extract_geodesic
from .generators import gen_ringed_tree, rt_vertex_count

__all__ = [
    "addr_of",
    "id_of",
    "ring_distance",
    "lca_height",
    "canonical_geodesic",
    "poincare_embed",
    "poincare_embed_table",
    "poincare_distance",
    "verify_quasi_isometry",
    "verify_structural_lemmas",
    "QuasiIsometryReport",
    "LemmaCheck",
    "StructuralLemmaReport",
    "QI_LOWER_SLOPE",
    "QI_LOWER_OFFSET",
    "QI_UPPER_SLOPE",
    "QI_UPPER_OFFSET",
]

# two-sided quasi-isometry envelope between tree distance and disk distance
QI_LOWER_SLOPE = math.log(2) / 2
QI_LOWER_OFFSET = -math.log(200)
QI_UPPER_SLOPE = math.log(2)
QI_UPPER_OFFSET = math.log(66 * math.pi**2)

REAL_TOL = 1e-9


def id_of(level, pos):
    if level < 0 or not 0 <= pos < 2**level:
        raise ValueError(f"invalid address (level={level}, pos={pos})")
    return (1 << level) - 1 + pos


def addr_of(vertex):
    if vertex < 0:
        raise ValueError(f"invalid vertex id {vertex}")
    level = (int(vertex) + 1).bit_length() - 1
    return level, int(vertex) - ((1 << level) - 1)


def ring_distance(level, p, q):
    """Hops between positions p and q along the level's ring only."""
    size = 1 << level
    if not (0 <= p < size and 0 <= q < size):
        raise ValueError(f"positions {p},{q} out of range at level {level}")
    delta = abs(int(p) - int(q))
    return min(delta, size - delta)


def lca_height(u, v):
    """Levels climbed to the lowest common ancestor of two same-level vertices."""
    (lu, p), (lv, q) = u, v
    if lu != lv:
        raise ValueError("lca_height expects two vertices on the same level")
    return (int(p) ^ int(q)).bit_length()


def _ring_arc(level, p, q):
    """Positions along the shorter ring arc from p to q (ties take the
    increasing-position arc from the smaller endpoint)."""
    size = 1 << level
    if p == q:
        return [p]
    fwd = (q - p) % size
    back = (p - q) % size
    if fwd < back:
        return [(p + i) % size for i in range(fwd + 1)]
    if back < fwd:
        return [(p - i) % size for i in range(back + 1)]
    # antipodal tie: both orientations take the increasing-position arc
    # between the endpoints, so the vertex set is orientation-independent
    return list(range(p, q + 1)) if p < q else list(range(p, q - 1, -1))


def canonical_geodesic(k, u, v):
    """The canonical geodesic between addresses u and v in a k-level ringed
    tree, as a vertex id list from u to v.

    Recursive structure: same level within ring distance 3 -> ring arc;
    same level farther apart -> hop to both parents around the recursion;
    different levels -> lift the deeper endpoint.  The result always has
    length equal to the graph distance.
    """
    (lu, pu), (lv, pv) = u, v
    for level, pos in (u, v):
        if not (0 <= level < k and 0 <= pos < (1 << level)):
            raise ValueError(f"address (level={level}, pos={pos}) invalid for k={k}")
    if lu > lv:
        return list(reversed(canonical_geodesic(k, v, u)))
    if lu < lv:
        return canonical_geodesic(k, u, (lv - 1, pv >> 1)) + [id_of(lv, pv)]
    if ring_distance(lu, pu, pv) <= 3:
        return [id_of(lu, pos) for pos in _ring_arc(lu, pu, pv)]
    upper = canonical_geodesic(k, (lu - 1, pu >> 1), (lv - 1, pv >> 1))
    return [id_of(lu, pu)] + upper + [id_of(lv, pv)]


# ---------------------------------------------------------------------------
# Poincare disk
# ---------------------------------------------------------------------------


def poincare_embed(addr):
    """Disk coordinate of one address: radius sqrt(1-2**-level), angle
    2*pi*pos/2**level.  Returns a complex number strictly inside the disk."""
    level, pos = addr
    if level < 0 or not 0 <= pos < 2**level:
        raise ValueError(f"invalid address (level={level}, pos={pos})")
    r = math.sqrt(1.0 - 2.0 ** (-level))
    theta = 2.0 * math.pi * pos / (1 << level)
    return complex(r * math.cos(theta), r * math.sin(theta))


def poincare_embed_table(k):
    """Disk coordinates for every vertex id of a k-level ringed tree."""
    out = np.empty(rt_vertex_count(k), dtype=np.complex128)
    for level in range(k):
        base = (1 << level) - 1
        r = math.sqrt(1.0 - 2.0 ** (-level))
        theta = 2.0 * np.pi * np.arange(1 << level) / (1 << level)
        out[base:base + (1 << level)] = r * np.exp(1j * theta)
    return out


def poincare_distance(p, q):
    """Hyperbolic distance in the unit disk (arccosh form); vectorized."""
    p = np.asarray(p, dtype=np.complex128)
    q = np.asarray(q, dtype=np.complex128)
    np2 = np.abs(p) ** 2
    nq2 = np.abs(q) ** 2
    if (np2 >= 1.0).any() or (nq2 >= 1.0).any():
        raise ValueError("points must lie strictly inside the unit disk")
    arg = 1.0 + 2.0 * np.abs(p - q) ** 2 / ((1.0 - np2) * (1.0 - nq2))
    out = np.arccosh(arg)
    return float(out) if out.ndim == 0 else out


# ---------------------------------------------------------------------------
# Verifiers
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuasiIsometryReport:
    k: int
    pairs: int
    violations: int
    worst_lower_margin: float  # min over pairs of d_P - lower bound
    worst_upper_margin: float  # min over pairs of upper bound - d_P

    @property
    def passed(self):
        return self.violations == 0


def verify_quasi_isometry(k, tol=REAL_TOL, threads=None) -> QuasiIsometryReport:
    """Check the two-sided distance envelope between the k-level ringed tree
    and its disk embedding on every vertex pair."""
    g, addr = gen_ringed_tree(k)
    m = all_pairs(g, threads=threads)
    z = poincare_embed_table(k)
    iu, iv = np.triu_indices(g.n)
    d_rt = m.dist[iu, iv].astype(np.float64)
    dp = poincare_distance(z[iu], z[iv])
    lower = QI_LOWER_SLOPE * d_rt + QI_LOWER_OFFSET
    upper = QI_UPPER_SLOPE * d_rt + QI_UPPER_OFFSET
    lo_margin = dp - lower
    hi_margin = upper - dp
    violations = int(((lo_margin < -tol) | (hi_margin < -tol)).sum())
    return QuasiIsometryReport(
        k=k,
        pairs=len(iu),
        violations=violations,
        worst_lower_margin=float(lo_margin.min()),
        worst_upper_margin=float(hi_margin.min()),
    )


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    checked: int
    violations: int
    worst: tuple = ()

    @property
    def passed(self):
        return self.violations == 0


@dataclass(frozen=True)
class StructuralLemmaReport:
    k: int
    checks: tuple

    def __getitem__(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)


def _check_halving(k):
    checked = violations = 0
    worst = ()
    for level in range(1, k):
        size = 1 << level
        p, q = np.triu_indices(size, k=1)
        dr = np.minimum(q - p, size - (q - p))
        delta = np.abs((q >> 1) - (p >> 1))
        drp = np.minimum(delta, (size >> 1) - delta)
        bad = drp > (dr + 1) / 2
        checked += len(p)
        if bad.any():
            violations += int(bad.sum())
            i = int(np.flatnonzero(bad)[0])
            if not worst:
                worst = (level, int(p[i]), int(q[i]), int(dr[i]), int(drp[i]))
    return LemmaCheck("halving", checked, violations, worst)


def _check_canonical_length(k, m):
    checked = violations = 0
    worst = ()
    worst_gap = 0
    n = rt_vertex_count(k)
    for u in range(n):
        au = addr_of(u)
        for v in range(u + 1, n):
            path = canonical_geodesic(k, au, addr_of(v))
            gap = abs(len(path) - 1 - int(m.dist[u, v]))
            checked += 1
            if gap:
                violations += 1
                if gap > worst_gap:
                    worst_gap = gap
                    worst = (u, v, len(path) - 1, int(m.dist[u, v]))
    return LemmaCheck("canonical_length", checked, violations, worst)


def _mutual_within(dist, a, b, radius):
    sub = dist[np.ix_(a, b)]
    return int(sub.min(axis=1).max()) <= radius and int(sub.min(axis=0).max()) <= radius


def _check_rectification(k, g, m, samples, rng):
    checked = violations = 0
    worst = ()
    n = g.n
    for _ in range(samples):
        u, v = (rng.random(2) * n).astype(np.int64)
        geo = extract_geodesic(g, m, int(u), int(v))
        can = canonical_geodesic(k, addr_of(int(u)), addr_of(int(v)))
        checked += 1
        if not _mutual_within(m.dist, np.asarray(geo), np.asarray(can), 1):
            violations += 1
            if not worst:
                worst = (int(u), int(v))
    return LemmaCheck("rectification", checked, violations, worst)


def _check_triangle_slimness(k, g, m, samples, rng):
    from .hyperbolicity import triangle_slimness

    checked = violations = 0
    worst = ()
    worst_slim = -1
    n = g.n
    for _ in range(samples):
        u, v, w = ((rng.random(3) * n).astype(np.int64)).tolist()
        au, av, aw = addr_of(u), addr_of(v), addr_of(w)
        rep = triangle_slimness(g, m, (
            canonical_geodesic(k, au, av),
            canonical_geodesic(k, av, aw),
            canonical_geodesic(k, aw, au),
        ))
        checked += 1
        if rep.slimness > 3:
            violations += 1
        if rep.slimness > worst_slim:
            worst_slim = rep.slimness
            worst = (u, v, w, rep.slimness)
    return LemmaCheck("triangle_slimness", checked, violations, worst)


def _check_ring_distance_bounds(k, m, tol=REAL_TOL):
    checked = violations = 0
    worst = ()
    worst_margin = 0.0
    for level in range(1, k):
        size = 1 << level
        base = size - 1
        p, q = np.triu_indices(size, k=1)
        dr = np.minimum(q - p, size - (q - p)).astype(np.float64)
        d = m.dist[base + p, base + q].astype(np.float64)
        keep = d > 1
        dr, d, p, q = dr[keep], d[keep], p[keep], q[keep]
        lower = 2.0 * np.log2(dr)
        with np.errstate(divide="ignore"):  # dr=1 with d>1 only on broken graphs
            upper = 2.0 * np.log2(dr - 1.0) + 2.0
        bad_lo = d < lower - tol
        bad_hi = d > upper + tol
        checked += len(d)
        bad = bad_lo | bad_hi
        if bad.any():
            violations += int(bad.sum())
            margins = np.where(bad_lo, lower - d, d - upper)
            i = int(np.argmax(np.where(bad, margins, -np.inf)))
            if margins[i] > worst_margin:
                worst_margin = float(margins[i])
                side = "lower" if bad_lo[i] else "upper"
                worst = (level, int(p[i]), int(q[i]), int(dr[i]), int(d[i]), side)
    return LemmaCheck("ring_distance_bounds", checked, violations, worst)


def verify_structural_lemmas(k, samples=10_000, seed=0, graph=None,
                             threads=None) -> StructuralLemmaReport:
    """Run the five ringed-tree structure checks and report each verdict.

    * halving: lifting a same-level pair to its parents at most halves the
      ring distance (rounded up).
    * canonical_length: every canonical geodesic has length equal to the
      BFS distance (checked on all pairs).
    * rectification: a BFS geodesic and the canonical geodesic stay within
      distance 1 of each other (sampled pairs).
    * triangle_slimness: canonical triangles are 3-slim (sampled triples).
    * ring_distance_bounds: same-level distance vs ring distance satisfies
      2*log2(d_R) <= d <= 2*log2(d_R - 1) + 2 for d > 1 (all pairs).

    ``graph`` substitutes a (possibly corrupted) graph for the freshly
    generated ringed tree; address arithmetic still assumes k levels.
    """
    if graph is None:
        g, _ = gen_ringed_tree(k)
    else:
        g = graph
        if g.n != rt_vertex_count(k):
            raise ValueError("graph size does not match a k-level ringed tree")
    m = all_pairs(g, threads=threads)
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    checks = (
        _check_halving(k),
        _check_canonical_length(k, m),
        _check_rectification(k, g, m, samples, rng),
        _check_triangle_slimness(k, g, m, samples, rng),
        _check_ring_distance_bounds(k, m),
    )
    return StructuralLemmaReport(k=k, checks=checks)
