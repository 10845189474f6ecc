"""Four-point Gromov delta (exact and sampled) and geodesic-triangle slimness.

Delta values are stored doubled (``two_delta``): on an unweighted graph the
four-point delta is always an integer or half-integer, so the doubled value
is an exact integer and no floats enter any comparison path.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graph import DistanceMatrix, Graph, extract_geodesic, num_threads

__all__ = [
    "DeltaReport",
    "SlimnessReport",
    "four_point_delta",
    "exact_delta",
    "sampled_delta",
    "triangle_slimness",
    "rips_lower_bound",
    "rips_exhaustive",
    "EXACT_SCAN_DEFAULT_LIMIT",
]

EXACT_SCAN_DEFAULT_LIMIT = 1200  # n**4/24 comparisons beyond this exceed desk scale


@dataclass(frozen=True)
class DeltaReport:
    """Result of a delta computation; ``two_delta`` is the doubled value."""

    two_delta: int
    method: str  # "exact" | "sampled"
    witness: tuple
    diameter: int
    samples: int = 0
    seed: int = 0

    @property
    def delta(self):
        return self.two_delta / 2.0


@dataclass(frozen=True)
class SlimnessReport:
    triangle: tuple
    sides: tuple
    slimness: int


def four_point_delta(duv, dwx, duw, dvx, dux, dvw):
    """Doubled four-point value from the six pairwise distances.

    Forms the three pairing sums S1 = duv+dwx, S2 = dux+dvw, S3 = duw+dvx
    and returns max - median, which equals twice the quadruple's delta.
    """
    s = sorted((int(duv) + int(dwx), int(dux) + int(dvw), int(duw) + int(dvx)))
    return s[2] - s[1]


def _quad_values(dist, quads):
    from . import _kernels

    return _kernels.four_point_batch(dist, quads)


def exact_delta(m: DistanceMatrix, limit=EXACT_SCAN_DEFAULT_LIMIT, threads=None) -> DeltaReport:
    """Exact graph delta by full scan over all unordered quadruples.

    The scan is O(n^4); sizes above ``limit`` are refused (pass a larger
    limit explicitly to override).  The witness is the lexicographically
    smallest quadruple attaining the maximum, independent of thread count.
    """
    if not m.connected:
        raise ValueError("exact delta is defined for connected graphs only")
    if limit is not None and m.n > limit:
        raise ValueError(
            f"refusing O(n^4) scan at n={m.n} > limit={limit}; "
            "raise the limit to override")
    from . import _kernels

    if m.n < 4:
        # no four distinct vertices exist; any degenerate quadruple attains 0
        return DeltaReport(two_delta=0, method="exact", witness=(0, 0, 0, 0),
                           diameter=m.diameter)
    with num_threads(threads):
        best, wit = _kernels.four_point_scan(m.dist)
    u = int(np.flatnonzero(best == best.max())[0])
    return DeltaReport(
        two_delta=int(best[u]),
        method="exact",
        witness=tuple(int(x) for x in wit[u]),
        diameter=m.diameter,
    )


def sampled_delta(m: DistanceMatrix, samples, seed, chunk=1 << 20) -> DeltaReport:
    """Lower-bound delta estimate from uniform random quadruples.

    Quadruples are drawn i.i.d. with replacement; the stream for a given
    seed is fixed, so a larger budget scans a superset of a smaller one and
    the estimate is monotone in ``samples``.  Always <= the exact delta.
    """
    if not m.connected:
        raise ValueError("sampled delta is defined for connected graphs only")
    samples = int(samples)
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    best = -1
    witness = (0, 0, 0, 0)
    done = 0
    while done < samples:
        take = min(chunk, samples - done)
        # floor of uniform floats keeps the sample stream prefix-stable
        quads = (rng.random((take, 4)) * m.n).astype(np.int64)
        vals = _quad_values(m.dist, quads)
        i = int(np.argmax(vals))
        if vals[i] > best:
            best = int(vals[i])
            witness = tuple(int(x) for x in quads[i])
        done += take
    return DeltaReport(
        two_delta=best,
        method="sampled",
        witness=witness,
        diameter=m.diameter,
        samples=samples,
        seed=seed,
    )


def sampled_delta_bfs(g: Graph, samples, seed) -> DeltaReport:
    """Sampled delta for graphs whose distance matrix exceeds memory.

    Runs four BFS sweeps per sampled quadruple instead of using a matrix;
    the reported diameter is the largest distance observed among sampled
    quadruples (a lower bound on the true diameter).
    """
    from .graph import bfs_distances

    samples = int(samples)
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    best = -1
    witness = (0, 0, 0, 0)
    seen_diameter = 0
    for _ in range(samples):
        q = (rng.random(4) * g.n).astype(np.int64)
        rows = [bfs_distances(g, int(v)) for v in q]
        d = [[int(rows[i][q[j]]) for j in range(4)] for i in range(4)]
        val = four_point_delta(d[0][1], d[2][3], d[0][2], d[1][3], d[0][3], d[1][2])
        seen_diameter = max(seen_diameter, max(max(r) for r in d))
        if val > best:
            best = val
            witness = tuple(int(x) for x in q)
    return DeltaReport(two_delta=best, method="sampled", witness=witness,
                       diameter=seen_diameter, samples=samples, seed=seed)


def _check_sides(sides):
    if len(sides) != 3:
        raise ValueError("a triangle needs exactly three sides")
    a, b, c = sides
    if not (a[-1] == b[0] and b[-1] == c[0] and c[-1] == a[0]):
        raise ValueError("side endpoints do not chain into a triangle")


def triangle_slimness(g: Graph, m: DistanceMatrix, sides) -> SlimnessReport:
    """Slimness of one geodesic triangle: the worst distance from a vertex
    on a side to the union of the other two sides.

    Distances are measured between vertices only, matching the convention
    for unweighted graphs.
    """
    _check_sides(sides)
    arrs = [np.asarray(s, dtype=np.int64) for s in sides]
    worst = 0
    for i in range(3):
        others = np.concatenate([arrs[(i + 1) % 3], arrs[(i + 2) % 3]])
        sub = m.dist[np.ix_(arrs[i], others)]
        worst = max(worst, int(sub.min(axis=1).max()))
    return SlimnessReport(
        triangle=(int(arrs[0][0]), int(arrs[1][0]), int(arrs[2][0])),
        sides=tuple(tuple(int(x) for x in s) for s in arrs),
        slimness=worst,
    )


def rips_lower_bound(g: Graph, m: DistanceMatrix, triple_samples, seed) -> SlimnessReport:
    """Max slimness over sampled triples with deterministic geodesic sides.

    This is a lower bound on the Rips delta: it inspects one geodesic
    representative per pair, while the Rips condition quantifies over all
    geodesic triangles.
    """
    if not m.connected:
        raise ValueError("rips lower bound is defined for connected graphs only")
    triple_samples = int(triple_samples)
    if triple_samples < 1:
        raise ValueError("triple_samples must be >= 1")
    rng = np.random.default_rng(np.random.SeedSequence(seed))
    triples = (rng.random((triple_samples, 3)) * g.n).astype(np.int64)
    best = None
    for u, v, w in triples:
        rep = triangle_slimness(g, m, (
            extract_geodesic(g, m, u, v),
            extract_geodesic(g, m, v, w),
            extract_geodesic(g, m, w, u),
        ))
        if best is None or rep.slimness > best.slimness:
            best = rep
    return best


def _all_geodesics(g, m, u, v, cap):
    """Every geodesic u -> v (via the shortest-path DAG); len capped."""
    col = m.dist[:, v]
    out = []

    def expand(prefix, w):
        if w == v:
            out.append(list(prefix))
            if len(out) > cap:
                raise ValueError(f"geodesic count between {u} and {v} exceeds cap {cap}")
            return
        target = int(col[w]) - 1
        for x in g.neighbors(w):
            if col[x] == target:
                prefix.append(int(x))
                expand(prefix, int(x))
                prefix.pop()

    expand([u], u)
    return out


def rips_exhaustive(g: Graph, m: DistanceMatrix, path_cap=10_000, max_n=40):
    """Exact Rips delta by enumerating every geodesic triangle.

    Worst-case exponential; only sensible on tiny graphs, hence the hard
    ``max_n`` guard.  Returns (delta_rips, witness SlimnessReport).
    """
    if g.n > max_n:
        raise ValueError(f"exhaustive Rips enumeration limited to n <= {max_n}")
    if not m.connected:
        raise ValueError("rips delta is defined for connected graphs only")
    geos = {}
    for u in range(g.n):
        for v in range(u, g.n):
            geos[(u, v)] = _all_geodesics(g, m, u, v, path_cap)

    def side(a, b):
        if a <= b:
            return geos[(a, b)]
        return [list(reversed(p)) for p in geos[(b, a)]]

    best = None
    for u in range(g.n):
        for v in range(u, g.n):
            for w in range(v, g.n):
                for pa in side(u, v):
                    for pb in side(v, w):
                        for pc in side(w, u):
                            rep = triangle_slimness(g, m, (pa, pb, pc))
                            if best is None or rep.slimness > best.slimness:
                                best = rep
    return best.slimness, best
