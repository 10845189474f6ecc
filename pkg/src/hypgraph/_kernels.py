"""Numba kernels for the two hot paths: BFS sweeps and the O(n^4) delta scan.

Every parallel kernel is race-free by construction (disjoint writes per
``prange`` index, reductions done sequentially afterwards), so output is
bit-identical for any thread count.
"""

import numpy as np
from numba import njit, prange


@njit(cache=True)
def bfs_single(indptr, indices, source, dist, sentinel):
    n = dist.shape[0]
    queue = np.empty(n, dtype=np.int32)
    for i in range(n):
        dist[i] = sentinel
    dist[source] = 0
    queue[0] = source
    head, tail = 0, 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u]
        for k in range(indptr[u], indptr[u + 1]):
            v = indices[k]
            if dist[v] == sentinel:
                dist[v] = du + 1
                queue[tail] = v
                tail += 1


@njit(cache=True, parallel=True)
def bfs_all(indptr, indices, out, sentinel):
    n = out.shape[0]
    for s in prange(n):
        dist = out[s]
        queue = np.empty(n, dtype=np.int32)
        for i in range(n):
            dist[i] = sentinel
        dist[s] = 0
        queue[0] = s
        head, tail = 0, 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u]
            for k in range(indptr[u], indptr[u + 1]):
                v = indices[k]
                if dist[v] == sentinel:
                    dist[v] = du + 1
                    queue[tail] = v
                    tail += 1


@njit(cache=True, parallel=True)
def four_point_scan(dist):
    """Max of (largest - median) pairing sum over all quadruples u<v<w<x.

    Returns per-leading-vertex partial results; the caller reduces them in
    ascending u order, which selects the lexicographically smallest witness
    regardless of scheduling.
    """
    n = dist.shape[0]
    best = np.full(n, -1, dtype=np.int64)
    wit = np.full((n, 4), -1, dtype=np.int64)
    for u in prange(n - 3):
        bu = np.int64(-1)
        w0 = w1 = w2 = w3 = -1
        for v in range(u + 1, n):
            duv = np.int64(dist[u, v])
            for w in range(v + 1, n):
                duw = np.int64(dist[u, w])
                dvw = np.int64(dist[v, w])
                for x in range(w + 1, n):
                    s1 = duv + dist[w, x]
                    s2 = np.int64(dist[u, x]) + dvw
                    s3 = duw + dist[v, x]
                    if s1 >= s2:
                        if s2 >= s3:
                            val = s1 - s2
                        elif s1 >= s3:
                            val = s1 - s3
                        else:
                            val = s3 - s1
                    else:
                        if s1 >= s3:
                            val = s2 - s1
                        elif s2 >= s3:
                            val = s2 - s3
                        else:
                            val = s3 - s2
                    if val > bu:
                        bu = val
                        w0, w1, w2, w3 = u, v, w, x
        best[u] = bu
        wit[u, 0], wit[u, 1], wit[u, 2], wit[u, 3] = w0, w1, w2, w3
    return best, wit


@njit(cache=True)
def four_point_batch(dist, quads):
    """Doubled four-point values for an array of sampled quadruples."""
    m = quads.shape[0]
    out = np.empty(m, dtype=np.int64)
    for i in range(m):
        u, v, w, x = quads[i, 0], quads[i, 1], quads[i, 2], quads[i, 3]
        s1 = np.int64(dist[u, v]) + dist[w, x]
        s2 = np.int64(dist[u, x]) + dist[v, w]
        s3 = np.int64(dist[u, w]) + dist[v, x]
        if s1 >= s2:
            if s2 >= s3:
                out[i] = s1 - s2
            elif s1 >= s3:
                out[i] = s1 - s3
            else:
                out[i] = s3 - s1
        else:
            if s1 >= s3:
                out[i] = s2 - s1
            elif s2 >= s3:
                out[i] = s2 - s3
            else:
                out[i] = s3 - s2
    return out
