"""Breadth-first all-pairs distances, eccentricity and transmission."""

from __future__ import annotations

from collections import deque
from functools import lru_cache

import numpy as np

from .errors import DisconnectedError, VertexOutOfRangeError
from .graph import Graph


def _bfs(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in g.neighbors[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


@lru_cache(maxsize=4096)
def all_pairs_distances(g: Graph) -> np.ndarray:
    """Integer distance matrix of a connected graph (read-only array)."""
    d = np.empty((g.n, g.n), dtype=np.int64)
    for s in range(g.n):
        row = _bfs(g, s)
        if -1 in row:
            t = row.index(-1)
            raise DisconnectedError(f"graph is disconnected: no path from {s} to {t}", s, t)
        d[s] = row
    d.flags.writeable = False
    return d


def _check_vertex(d: np.ndarray, v: int) -> None:
    if not 0 <= v < d.shape[0]:
        raise VertexOutOfRangeError(f"vertex {v} outside 0..{d.shape[0] - 1}")


def eccentricity(d: np.ndarray, v: int) -> int:
    _check_vertex(d, v)
    return int(d[v].max())


def transmission(d: np.ndarray, v: int) -> int:
    _check_vertex(d, v)
    return int(d[v].sum())


def eccentricities(d: np.ndarray) -> list[int]:
    return [int(x) for x in d.max(axis=1)]
