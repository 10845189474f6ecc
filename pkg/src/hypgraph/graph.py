"""Immutable undirected graphs, BFS distances, and geodesic extraction.

The graph is stored in CSR form (``indptr``/``indices``) with a parallel
sorted edge array, all frozen after construction.  Distance matrices use
the narrowest unsigned integer width that can hold ``n`` so that sizes up
to n=2**14 stay within desk-scale memory; the maximum representable value
of that width is the unreachable sentinel.
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Graph",
    "DistanceMatrix",
    "MemoryCapExceeded",
    "DEFAULT_MEMORY_CAP",
    "bfs_distances",
    "all_pairs",
    "extract_geodesic",
    "read_edge_list",
    "write_edge_list",
    "num_threads",
    "EDGELIST_FORMAT_VERSION",
]

DEFAULT_MEMORY_CAP = 2 * 1024**3  # bytes; 2 GiB holds a uint16 matrix at n=2**14

EDGELIST_FORMAT_VERSION = 1

_EDGELIST_MAGIC = "hypgraph-edges"


class MemoryCapExceeded(RuntimeError):
    """Raised when a distance matrix would not fit under the memory cap."""

    def __init__(self, required_bytes, cap_bytes):
        self.required_bytes = int(required_bytes)
        self.cap_bytes = int(cap_bytes)
        super().__init__(
            f"distance matrix needs {self.required_bytes} bytes, "
            f"memory cap is {self.cap_bytes} bytes"
        )


def distance_dtype(n):
    """Narrowest unsigned dtype whose max value can serve as the sentinel."""
    if n < 2**8:
        return np.uint8
    if n < 2**16:
        return np.uint16
    return np.uint32


@contextmanager
def num_threads(threads):
    """Temporarily set the numba worker-thread count (clamped to the pool size).

    Results of every parallel kernel in this package are bit-identical for
    any thread count; this only controls how much hardware is used.
    """
    import numba

    if threads is None:
        yield
        return
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    old = numba.get_num_threads()
    numba.set_num_threads(min(int(threads), numba.config.NUMBA_NUM_THREADS))
    try:
        yield
    finally:
        numba.set_num_threads(old)


class Graph:
    """Immutable undirected simple graph on vertices 0..n-1.

    Parameters
    ----------
    n : int
        Vertex count (>= 1).
    edges : array-like of shape (m, 2)
        Undirected edges in any order/orientation; duplicates and both
        orientations collapse to one edge.  Self-loops are rejected.
    """

    __slots__ = ("n", "edges", "indptr", "indices")

    def __init__(self, n, edges):
        n = int(n)
        if n < 1:
            raise ValueError(f"vertex count must be >= 1, got {n}")
        edges = np.asarray(edges, dtype=np.int64).reshape(-1, 2)
        if edges.size:
            if edges.min() < 0 or edges.max() >= n:
                raise ValueError("edge endpoint out of range")
            if (edges[:, 0] == edges[:, 1]).any():
                raise ValueError("self-loops are not allowed")
            lo = np.minimum(edges[:, 0], edges[:, 1])
            hi = np.maximum(edges[:, 0], edges[:, 1])
            edges = np.unique(np.column_stack([lo, hi]), axis=0)
        else:
            edges = edges.reshape(0, 2)

        src = np.concatenate([edges[:, 0], edges[:, 1]])
        dst = np.concatenate([edges[:, 1], edges[:, 0]])
        order = np.lexsort((dst, src))  # by source, then neighbor id
        indices = dst[order].astype(np.int32)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])

        for arr in (edges, indptr, indices):
            arr.setflags(write=False)
        self.n = n
        self.edges = edges
        self.indptr = indptr
        self.indices = indices

    @property
    def edge_count(self):
        return self.edges.shape[0]

    def neighbors(self, v):
        """Sorted neighbor ids of ``v`` (read-only view)."""
        return self.indices[self.indptr[v]:self.indptr[v + 1]]

    def degree(self, v):
        return int(self.indptr[v + 1] - self.indptr[v])

    def has_edge(self, u, v):
        nb = self.neighbors(u)
        i = np.searchsorted(nb, v)
        return bool(i < nb.size and nb[i] == v)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edge_count})"


@dataclass(frozen=True)
class DistanceMatrix:
    """Dense all-pairs hop counts with the unreachable sentinel at dtype max."""

    n: int
    dist: np.ndarray
    diameter: int
    connected: bool

    @property
    def sentinel(self):
        return int(np.iinfo(self.dist.dtype).max)


def _kernels():
    # numba import deferred so that plain IO paths stay import-light
    from . import _kernels as k

    return k


def bfs_distances(g: Graph, source) -> np.ndarray:
    """Hop counts from ``source`` to every vertex; unreachable = dtype max."""
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range for n={g.n}")
    dt = distance_dtype(g.n)
    out = np.empty(g.n, dtype=dt)
    _kernels().bfs_single(g.indptr, g.indices, int(source), out,
                          np.iinfo(dt).max)
    return out


def all_pairs(g: Graph, memory_cap=DEFAULT_MEMORY_CAP, threads=None) -> DistanceMatrix:
    """All-pairs BFS distances as a DistanceMatrix.

    Rows are computed independently (in parallel when numba has more than
    one worker thread) and the result is bit-identical to a sequential
    per-source sweep.  Raises :class:`MemoryCapExceeded` when the matrix
    would not fit under ``memory_cap`` bytes.
    """
    dt = distance_dtype(g.n)
    required = g.n * g.n * np.dtype(dt).itemsize
    if memory_cap is not None and required > memory_cap:
        raise MemoryCapExceeded(required, memory_cap)
    out = np.empty((g.n, g.n), dtype=dt)
    with num_threads(threads):
        _kernels().bfs_all(g.indptr, g.indices, out, np.iinfo(dt).max)
    sent = np.iinfo(dt).max
    connected = not bool((out == sent).any())
    if connected:
        diameter = int(out.max())
    else:
        finite = out[out != sent]
        diameter = int(finite.max()) if finite.size else 0
    out.setflags(write=False)
    return DistanceMatrix(n=g.n, dist=out, diameter=diameter, connected=connected)


def extract_geodesic(g: Graph, m: DistanceMatrix, u, v):
    """One deterministic shortest path from u to v as a vertex id list.

    Geodesics are generally not unique; the representative chosen here
    steps from the current vertex to its smallest-id neighbor that is one
    hop closer to ``v``, which makes downstream slimness measurements
    reproducible.
    """
    u, v = int(u), int(v)
    sent = m.sentinel
    if m.dist[u, v] == sent:
        raise ValueError(f"vertices {u} and {v} are disconnected")
    path = [u]
    w = u
    col = m.dist[:, v]
    while w != v:
        target = int(col[w]) - 1
        nb = g.neighbors(w)
        step = nb[col[nb] == target]
        w = int(step[0])  # neighbors are sorted, so [0] is the smallest id
        path.append(w)
    return path


# ---------------------------------------------------------------------------
# Edge-list text format
#
#   # hypgraph-edges format=1 <key>=<value> ...
#   u v                (ASCII decimal, u < v, one per line, pair-sorted)
#
# Header metadata is a flat record echoing the generating spec.  Reading a
# file and writing it back is byte-identical.
# ---------------------------------------------------------------------------


def _format_value(v):
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return repr(v)
    return str(v)


def write_edge_list(path, g: Graph, metadata=None):
    """Write ``g`` in the edge-list text format with a metadata header.

    ``n`` is carried in the header so graphs with isolated vertices
    round-trip; any extra metadata (normally the generating spec) follows
    in insertion order.
    """
    items = dict(metadata or {})
    items.pop("n", None)
    parts = [f"# {_EDGELIST_MAGIC} format={EDGELIST_FORMAT_VERSION} n={g.n}"]
    parts += [f"{k}={_format_value(v)}" for k, v in items.items()]
    lines = [" ".join(parts)]
    lines += [f"{a} {b}" for a, b in g.edges]
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def read_edge_list(path):
    """Read the edge-list text format; returns (Graph, metadata dict)."""
    metadata = {}
    n = None
    edges = []
    with open(path, "r", encoding="ascii") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            if line.startswith("#"):
                fields = line[1:].split()
                if not fields or fields[0] != _EDGELIST_MAGIC:
                    raise ValueError(f"unrecognized edge-list header: {line!r}")
                for tok in fields[1:]:
                    key, _, val = tok.partition("=")
                    if key == "format":
                        if int(val) != EDGELIST_FORMAT_VERSION:
                            raise ValueError(f"unsupported edge-list format {val}")
                    elif key == "n":
                        n = int(val)
                    else:
                        metadata[key] = val
                continue
            a, b = line.split()
            edges.append((int(a), int(b)))
    if n is None:
        raise ValueError("edge-list header is missing n")
    return Graph(n, edges), metadata


class Timer:
    """Wall-clock stopwatch used for the runtime_ms fields."""

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.ms = int(round((time.perf_counter() - self.t0) * 1000.0))
        return False
