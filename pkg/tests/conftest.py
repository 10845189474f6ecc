"""Shared oracles for the test suite.

These deliberately avoid the package's BFS and scan kernels: distances come
from a dict-based BFS and delta values from a plain-Python quadruple loop,
so they can vouch for the fast paths independently.
"""

import itertools
from collections import deque

import numpy as np
import pytest

from hypgraph import Graph


def bfs_oracle(g: Graph, source):
    """Plain BFS over adjacency lists; -1 marks unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in g.neighbors(u):
            if dist[v] < 0:
                dist[v] = dist[u] + 1
                queue.append(int(v))
    return dist


def all_pairs_oracle(g: Graph):
    return np.array([bfs_oracle(g, s) for s in range(g.n)])


def brute_two_delta(dist):
    """Doubled four-point maximum by direct enumeration (independent oracle)."""
    n = len(dist)
    best = 0
    for u, v, w, x in itertools.combinations(range(n), 4):
        s1 = dist[u][v] + dist[w][x]
        s2 = dist[u][x] + dist[v][w]
        s3 = dist[u][w] + dist[v][x]
        hi, mid, _ = sorted((s1, s2, s3), reverse=True)
        best = max(best, hi - mid)
    return best


def cycle_metric(n):
    """Analytic distance matrix of the n-cycle: min(|i-j|, n-|i-j|)."""
    idx = np.arange(n)
    delta = np.abs(idx[:, None] - idx[None, :])
    return np.minimum(delta, n - delta)


def random_tree_edges(n, rng):
    """Uniform random recursive tree on n vertices."""
    return [(int(rng.integers(0, i)), i) for i in range(1, n)]


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240817)
