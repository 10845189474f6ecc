"""Seeded construction of every random-graph family used in this package.

Families
--------
KSW   d-dimensional wrap-around grid plus per-node long-range edges drawn
      with probability proportional to (grid distance)**(-gamma).
RT    ringed tree: full binary tree of k levels with each level joined in
      a ring.
RT_F  ringed tree plus one bounded-span random ring-level edge per vertex.
RRT   ringed tree plus random leaf-to-leaf edges drawn from a closeness law
      (exponential ring decay, power-law ring decay, or ancestor height).
RBT   same leaf-to-leaf edges on the bare binary tree (no rings).

Reproducibility contract: the RNG stream for draw ``t`` of node ``u`` is
derived from ``SeedSequence((seed, u, t))``, so per-node draws are
independent of evaluation order and a GenSpec (seed included) maps to one
edge set, byte-for-byte, regardless of thread count.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, fields

import numpy as np

from .graph import Graph

__all__ = [
    "GenSpec",
    "FAMILIES",
    "G_KINDS",
    "F_KINDS",
    "GENSPEC_FORMAT_VERSION",
    "generate",
    "gen_ksw",
    "gen_ringed_tree",
    "gen_rt_f",
    "gen_rrt",
    "gen_rbt",
    "grid_side",
    "grid_graph",
    "grid_distance",
    "grid_pair_distances",
    "rt_vertex_count",
    "genspec_to_text",
    "genspec_from_text",
]

FAMILIES = ("KSW", "RT", "RT_F", "RRT", "RBT")
G_KINDS = ("EXP_RING", "POW_RING", "LCA_HEIGHT")
F_KINDS = ("CONST", "LOG2")

GENSPEC_FORMAT_VERSION = 1


@dataclass(frozen=True)
class GenSpec:
    """Complete description of one generative-model instance.

    ``n`` is the vertex count for KSW; tree families are sized by the level
    count ``k`` (giving 2**k - 1 vertices).  ``g_kind``/``alpha`` select the
    leaf closeness law for RRT/RBT, ``f_kind``/``f_param`` the span bound
    for RT_F.  The variant flags mirror the model extensions: non-wrapped
    grids, several long-range edges per node, and fully independent edges.
    """

    family: str
    n: int = 0
    k: int = 0
    d: int = 1
    gamma: float = 0.0
    g_kind: str = ""
    alpha: float = 0.0
    f_kind: str = ""
    f_param: float = 0.0
    wrap: bool = True
    edges_per_node: int = 1
    independent: bool = False
    seed: int = 0

    def validate(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if self.edges_per_node < 1:
            raise ValueError("edges_per_node must be >= 1")
        if self.seed < 0 or self.seed >= 2**64:
            raise ValueError("seed must fit in 64 bits")
        if self.family == "KSW":
            if self.gamma < 0:
                raise ValueError("gamma must be >= 0")
            if self.d < 1:
                raise ValueError("grid dimension must be >= 1")
            grid_side(self.n, self.d)  # raises when n**(1/d) is not integral
        else:
            kmin = 1 if self.family == "RT" else 2
            if self.k < kmin:
                raise ValueError(f"{self.family} requires k >= {kmin}, got {self.k}")
            if self.family in ("RRT", "RBT"):
                if self.g_kind not in G_KINDS:
                    raise ValueError(f"g_kind must be one of {G_KINDS}")
                if self.alpha <= 0:
                    raise ValueError("alpha must be > 0")
            if self.family == "RT_F":
                if self.f_kind not in F_KINDS:
                    raise ValueError(f"f_kind must be one of {F_KINDS}")
        return self

    @property
    def vertex_count(self):
        if self.family == "KSW":
            return self.n
        return rt_vertex_count(self.k)


def rt_vertex_count(k):
    return 2**k - 1


def generate(spec: GenSpec) -> Graph:
    """Build the graph described by ``spec`` (dispatch over families)."""
    spec.validate()
    if spec.family == "KSW":
        return gen_ksw(spec)
    if spec.family == "RT":
        return gen_ringed_tree(spec.k)[0]
    if spec.family == "RT_F":
        return gen_rt_f(spec)
    if spec.family == "RRT":
        return gen_rrt(spec)
    return gen_rbt(spec)


def _draw_rng(seed, node, draw):
    return np.random.default_rng(np.random.SeedSequence((seed, node, draw)))


# ---------------------------------------------------------------------------
# Grids and the KSW small-world family
# ---------------------------------------------------------------------------


def grid_side(n, d):
    """Side length n**(1/d); raises unless it is an exact integer >= 2."""
    if n < 2**d:
        raise ValueError(f"n={n} too small for a d={d} grid")
    side = round(n ** (1.0 / d))
    for s in (side - 1, side, side + 1):
        if s >= 2 and s**d == n:
            return s
    raise ValueError(f"n={n} is not a perfect d={d} grid size (n**(1/d) not integral)")


def _coords(n, side, d):
    """Row-major coordinates of all vertex ids, shape (n, d)."""
    ids = np.arange(n)
    out = np.empty((n, d), dtype=np.int64)
    for j in range(d - 1, -1, -1):
        out[:, j] = ids % side
        ids = ids // side
    return out


def grid_distance(a, b, side, wrap):
    """L1 grid distance between coordinate tuples, wrapped per dimension."""
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    delta = np.abs(a - b)
    if wrap:
        delta = np.minimum(delta, side - delta)
    return int(delta.sum())

def grid_pair_distances(ids_a, ids_b, side, d, wrap):
    """Vectorized grid distance between two id arrays (elementwise)."""
    ids_a = np.asarray(ids_a, dtype=np.int64)
    ids_b = np.asarray(ids_b, dtype=np.int64)
    total = np.zeros(ids_a.shape, dtype=np.int64)
    for _ in range(d):
        delta = np.abs(ids_a % side - ids_b % side)
        if wrap:
            delta = np.minimum(delta, side - delta)
        total += delta
        ids_a = ids_a // side
        ids_b = ids_b // side
    return total


def _grid_edges(side, d, wrap):
    n = side**d
    ids = np.arange(n)
    coords = _coords(n, side, d)
    blocks = []
    stride = 1
    for j in range(d - 1, -1, -1):
        if wrap:
            nxt = ids + np.where(coords[:, j] + 1 < side, stride, stride - side * stride)
            blocks.append(np.column_stack([ids, nxt]))
        else:
            keep = coords[:, j] + 1 < side
            blocks.append(np.column_stack([ids[keep], ids[keep] + stride]))
        stride *= side
    return np.concatenate(blocks)


def grid_graph(side, d, wrap=True) -> Graph:
    """The bare d-dimensional grid (no long-range edges)."""
    if side < 2:
        raise ValueError("grid side must be >= 2")
    return Graph(side**d, _grid_edges(side, d, wrap))


class _WrapClassTable:
    """Distance-class decomposition of the wrap-grid target law.

    The wrap grid is vertex-transitive, so one table serves all nodes: a
    class is a grid distance r, weighted by (number of offsets at r) *
    r**(-gamma).  Sampling a class and then a uniform member reproduces the
    per-target law exactly.
    """

    def __init__(self, side, d, gamma):
        n = side**d
        offsets = np.arange(1, n)  # flat offset ids; 0 is the node itself
        r = grid_pair_distances(offsets, np.zeros(n - 1, dtype=np.int64), side, d, wrap=True)
        order = np.argsort(r, kind="stable")
        self.members = offsets[order]
        r_sorted = r[order]
        self.radii, starts, counts = np.unique(r_sorted, return_index=True, return_counts=True)
        self.starts = starts
        self.counts = counts
        weights = counts * self.radii.astype(np.float64) ** (-gamma)
        self.cum = np.cumsum(weights)
        self.total = float(self.cum[-1])

    def draw(self, u, coords, side, d, rng):
        i = int(np.searchsorted(self.cum, rng.random() * self.total, side="right"))
        i = min(i, len(self.radii) - 1)
        j = int(rng.integers(self.counts[i]))
        off = int(self.members[self.starts[i] + j])
        # add offset coordinates modulo the side, dimension by dimension
        v = 0
        stride = 1
        for jdim in range(d - 1, -1, -1):
            c = (coords[u, jdim] + (off // stride) % side) % side
            v += c * stride
            stride *= side
        return v


def _ksw_longrange_per_node(spec, side, coords):
    n = spec.n
    edges = []
    if spec.wrap:
        table = _WrapClassTable(side, spec.d, spec.gamma)
        for u in range(n):
            for t in range(spec.edges_per_node):
                rng = _draw_rng(spec.seed, u, t)
                v = table.draw(u, coords, side, spec.d, rng)
                edges.append((u, v) if u < v else (v, u))
    else:
        ids = np.arange(n)
        for u in range(n):
            dist = grid_pair_distances(np.full(n, u), ids, side, spec.d, wrap=False)
            w = np.zeros(n)
            nz = dist > 0
            w[nz] = dist[nz].astype(np.float64) ** (-spec.gamma)
            cum = np.cumsum(w)
            for t in range(spec.edges_per_node):
                rng = _draw_rng(spec.seed, u, t)
                v = int(np.searchsorted(cum, rng.random() * cum[-1], side="right"))
                v = min(v, n - 1)
                while v > 0 and cum[v] == cum[v - 1]:  # float-boundary guard
                    v -= 1
                edges.append((u, v) if u < v else (v, u))
    return np.array(edges, dtype=np.int64).reshape(-1, 2)


def _ksw_longrange_independent(spec, side, coords):
    n = spec.n
    # normalizer from the independent-edge variant: sum_{i<=side} i^(d-1-gamma)
    i = np.arange(1, side + 1, dtype=np.float64)
    norm = float(np.sum(i ** (spec.d - 1 - spec.gamma)))
    blocks = []
    for u in range(n - 1):
        rng = np.random.default_rng(np.random.SeedSequence((spec.seed, u)))
        v = np.arange(u + 1, n)
        dist = grid_pair_distances(np.full(v.shape, u), v, side, spec.d, spec.wrap)
        p = np.minimum(1.0, spec.edges_per_node * dist.astype(np.float64) ** (-spec.gamma) / norm)
        hit = rng.random(v.shape[0]) < p
        if hit.any():
            blocks.append(np.column_stack([np.full(int(hit.sum()), u), v[hit]]))
    if not blocks:
        return np.empty((0, 2), dtype=np.int64)
    return np.concatenate(blocks)


def gen_ksw(spec: GenSpec) -> Graph:
    """Kleinberg small-world graph: wrap grid plus long-range edges.

    Default mode draws exactly ``edges_per_node`` undirected targets per
    node with probability d_B(u,v)**(-gamma) / rho_u; the independent
    variant gives every unordered pair its own Bernoulli edge.  Long-range
    edges falling on grid edges (or on each other) collapse: the result is
    a simple graph containing the full base grid.
    """
    spec.validate()
    if spec.family != "KSW":
        raise ValueError(f"gen_ksw called with family {spec.family!r}")
    side = grid_side(spec.n, spec.d)
    coords = _coords(spec.n, side, spec.d)
    base = _grid_edges(side, spec.d, spec.wrap)
    if spec.independent:
        longrange = _ksw_longrange_independent(spec, side, coords)
    else:
        longrange = _ksw_longrange_per_node(spec, side, coords)
    return Graph(spec.n, np.concatenate([base, longrange]))


# ---------------------------------------------------------------------------
# Ringed trees and leaf-rewired variants
# ---------------------------------------------------------------------------


def _tree_edges(k):
    blocks = []
    for level in range(k - 1):
        parents = 2**level - 1 + np.arange(2**level)
        children = 2 ** (level + 1) - 1 + np.arange(2 ** (level + 1))
        blocks.append(np.column_stack([np.repeat(parents, 2), children]))
    if not blocks:
        return np.empty((0, 2), dtype=np.int64)
    return np.concatenate(blocks)


def _ring_edges(k):
    blocks = []
    for level in range(1, k):
        size = 2**level
        base = size - 1
        p = np.arange(size)
        blocks.append(np.column_stack([base + p, base + (p + 1) % size]))
    if not blocks:
        return np.empty((0, 2), dtype=np.int64)
    return np.concatenate(blocks)


def gen_ringed_tree(k):
    """Ringed tree of ``k`` levels; returns (Graph, address table).

    The address table maps vertex id -> (level, position); ids are assigned
    level by level, so id = 2**level - 1 + position.
    """
    if k < 1:
        raise ValueError("ringed tree needs k >= 1")
    n = rt_vertex_count(k)
    edges = np.concatenate([_tree_edges(k), _ring_edges(k)])
    addr = np.empty((n, 2), dtype=np.int64)
    for level in range(k):
        base = 2**level - 1
        addr[base:base + 2**level, 0] = level
        addr[base:base + 2**level, 1] = np.arange(2**level)
    addr.setflags(write=False)
    return Graph(n, edges), addr


def _span_bound(spec, n):
    if spec.f_kind == "CONST":
        return int(spec.f_param)
    if spec.f_kind == "LOG2":
        scale = spec.f_param if spec.f_param > 0 else 1.0
        return int(scale * math.log2(n))
    raise ValueError(f"unknown f_kind {spec.f_kind!r}")


def gen_rt_f(spec: GenSpec) -> Graph:
    """Ringed tree plus one bounded-span ring-level edge per vertex.

    Every vertex at levels >= 1 gains an edge to a uniformly random vertex
    at the same level within ring distance f(n).  Spans of 1 duplicate ring
    edges and collapse, so f <= 1 reproduces the plain ringed tree.
    """
    spec.validate()
    if spec.family != "RT_F":
        raise ValueError(f"gen_rt_f called with family {spec.family!r}")
    base, _ = gen_ringed_tree(spec.k)
    bound = _span_bound(spec, base.n)
    if bound < 1:
        warnings.warn("span bound f(n) < 1 adds no edges", RuntimeWarning, stacklevel=2)
        return base
    extra = []
    for level in range(1, spec.k):
        size = 2**level
        maxd = min(bound, size // 2)
        spans = []
        for dd in range(1, maxd + 1):
            spans.append((dd, 1))
            if 2 * dd != size:
                spans.append((dd, -1))
        idbase = size - 1
        for p in range(size):
            rng = _draw_rng(spec.seed, idbase + p, 0)
            dd, direction = spans[int(rng.integers(len(spans)))]
            q = (p + direction * dd) % size
            a, b = idbase + p, idbase + q
            extra.append((a, b) if a < b else (b, a))
    return Graph(base.n, np.concatenate([base.edges, np.array(extra, dtype=np.int64)]))


class _LeafClassTable:
    """Closeness-law decomposition over the 2**(k-1) leaves.

    Ring-distance laws are ring-transitive (class = ring distance, two
    members except at the antipode); the ancestor-height law groups the
    2**(h-1) leaves whose lowest common ancestor with the source sits h
    levels up.
    """

    def __init__(self, k, g_kind, alpha):
        self.k = k
        self.g_kind = g_kind
        self.alpha = alpha
        leaves = 2 ** (k - 1)
        if g_kind in ("EXP_RING", "POW_RING"):
            ds = np.arange(1, leaves // 2 + 1, dtype=np.int64)
            counts = np.where(2 * ds == leaves, 1, 2).astype(np.int64)
            if g_kind == "EXP_RING":
                member = np.exp(-alpha * ds.astype(np.float64))
            else:
                member = ds.astype(np.float64) ** (-alpha)
            self.classes = ds
        else:
            hs = np.arange(1, k, dtype=np.int64)
            counts = 2 ** (hs - 1)
            member = 2.0 ** (-alpha * hs.astype(np.float64))
            self.classes = hs
        self.counts = counts
        self.member_weight = member
        self.cum = np.cumsum(counts * member)
        self.total = float(self.cum[-1])

    def draw(self, p, rng):
        leaves = 2 ** (self.k - 1)
        i = int(np.searchsorted(self.cum, rng.random() * self.total, side="right"))
        i = min(i, len(self.classes) - 1)
        j = int(rng.integers(self.counts[i]))
        if self.g_kind in ("EXP_RING", "POW_RING"):
            dd = int(self.classes[i])
            return (p + dd) % leaves if j == 0 or 2 * dd == leaves else (p - dd) % leaves
        h = int(self.classes[i])
        block = p >> h
        low = p & ((1 << h) - 1)
        sibling_start = (block << h) + ((1 << (h - 1)) if low < (1 << (h - 1)) else 0)
        return sibling_start + j

    def weights_from(self, p):
        """Per-target weight vector from leaf position p (the exact law)."""
        leaves = 2 ** (self.k - 1)
        q = np.arange(leaves)
        if self.g_kind in ("EXP_RING", "POW_RING"):
            delta = np.abs(q - p)
            dr = np.minimum(delta, leaves - delta)
            w = np.zeros(leaves)
            nz = dr > 0
            w[nz] = self.member_weight[dr[nz] - 1]
            return w
        xor = np.bitwise_xor(q, p)
        w = np.zeros(leaves)
        nz = xor > 0
        h = np.floor(np.log2(xor[nz])).astype(np.int64) + 1
        w[nz] = self.member_weight[h - 1]
        return w


def _leaf_longrange(spec, table):
    k = spec.k
    leaves = 2 ** (k - 1)
    idbase = leaves - 1
    edges = []
    if spec.independent:
        for p in range(leaves):
            rng = np.random.default_rng(np.random.SeedSequence((spec.seed, idbase + p)))
            w = table.weights_from(p)
            prob = np.minimum(1.0, spec.edges_per_node * w / w.sum())
            hit = np.flatnonzero(rng.random(leaves) < prob)
            for q in hit:
                if q != p:
                    a, b = idbase + p, idbase + int(q)
                    edges.append((a, b) if a < b else (b, a))
    else:
        for p in range(leaves):
            for t in range(spec.edges_per_node):
                rng = _draw_rng(spec.seed, idbase + p, t)
                q = table.draw(p, rng)
                a, b = idbase + p, idbase + q
                edges.append((a, b) if a < b else (b, a))
    if not edges:
        return np.empty((0, 2), dtype=np.int64)
    return np.array(edges, dtype=np.int64)


def gen_rrt(spec: GenSpec) -> Graph:
    """Random ringed tree: RT(k) plus closeness-law edges among the leaves."""
    spec.validate()
    if spec.family != "RRT":
        raise ValueError(f"gen_rrt called with family {spec.family!r}")
    base, _ = gen_ringed_tree(spec.k)
    table = _LeafClassTable(spec.k, spec.g_kind, spec.alpha)
    return Graph(base.n, np.concatenate([base.edges, _leaf_longrange(spec, table)]))


def gen_rbt(spec: GenSpec) -> Graph:
    """Rewired binary tree: same leaf edges as RRT but no ring edges."""
    spec.validate()
    if spec.family != "RBT":
        raise ValueError(f"gen_rbt called with family {spec.family!r}")
    table = _LeafClassTable(spec.k, spec.g_kind, spec.alpha)
    return Graph(rt_vertex_count(spec.k),
                 np.concatenate([_tree_edges(spec.k), _leaf_longrange(spec, table)]))


# ---------------------------------------------------------------------------
# GenSpec flat text document
# ---------------------------------------------------------------------------

_BOOL_FIELDS = {"wrap", "independent"}
_FLOAT_FIELDS = {"gamma", "alpha", "f_param"}
_STR_FIELDS = {"family", "g_kind", "f_kind"}


def spec_metadata(spec: GenSpec):
    """GenSpec as an ordered flat mapping (used in edge-list headers)."""
    out = {}
    for f in fields(GenSpec):
        v = getattr(spec, f.name)
        if isinstance(v, bool):
            out[f.name] = "true" if v else "false"
        elif isinstance(v, float):
            out[f.name] = repr(v)
        else:
            out[f.name] = str(v)
    return out


def spec_from_metadata(meta) -> GenSpec:
    kwargs = {}
    for f in fields(GenSpec):
        if f.name not in meta:
            continue
        raw = meta[f.name]
        if f.name in _BOOL_FIELDS:
            kwargs[f.name] = raw == "true"
        elif f.name in _FLOAT_FIELDS:
            kwargs[f.name] = float(raw)
        elif f.name in _STR_FIELDS:
            kwargs[f.name] = raw
        else:
            kwargs[f.name] = int(raw)
    return GenSpec(**kwargs)


def genspec_to_text(spec: GenSpec) -> str:
    lines = [f"hypgraph-genspec format={GENSPEC_FORMAT_VERSION}"]
    lines += [f"{k}={v}" for k, v in spec_metadata(spec).items()]
    return "\n".join(lines) + "\n"


def genspec_from_text(text: str) -> GenSpec:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("hypgraph-genspec"):
        raise ValueError("not a genspec document")
    head = dict(tok.partition("=")[::2] for tok in lines[0].split()[1:])
    if int(head.get("format", "0")) != GENSPEC_FORMAT_VERSION:
        raise ValueError(f"unsupported genspec format {head.get('format')}")
    meta = {}
    for ln in lines[1:]:
        key, _, val = ln.partition("=")
        meta[key.strip()] = val.strip()
    return spec_from_metadata(meta)
