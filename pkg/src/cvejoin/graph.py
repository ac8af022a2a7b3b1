"""Simple undirected graphs, standard families and derived graphs.

Vertices are the integers ``0..n-1``. Edges are stored as ``(u, v)`` with
``u < v``, sorted lexicographically; that order is what the incidence
matrix, the line graph and the central graph use for edge-vertices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

import numpy as np

from .errors import (
    DuplicateEdgeError,
    EmptyListError,
    EndpointOutOfRangeError,
    InvalidSizeError,
    NoEdgesError,
    SelfLoopError,
)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(s) for s in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(s) for s in self.neighbors)

    @cached_property
    def edge_index(self) -> dict[tuple[int, int], int]:
        return {e: i for i, e in enumerate(self.edges)}

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbors[u]

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def new_graph(n: int, edge_list) -> Graph:
    """Validate an edge list and return the canonical graph.

    Duplicate pairs (in either orientation) raise rather than being merged.
    """
    if n < 0:
        raise InvalidSizeError(f"vertex count must be non-negative, got {n}")
    seen = set()
    for pair in edge_list:
        u, v = (int(x) for x in pair)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise EndpointOutOfRangeError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise DuplicateEdgeError(f"duplicate edge {e}")
        seen.add(e)
    return Graph(n, tuple(sorted(seen)))


def empty_graph(n: int) -> Graph:
    return new_graph(n, [])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidSizeError(f"cycle needs n >= 3, got {n}")
    return new_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidSizeError(f"complete graph needs n >= 1, got {n}")
    return new_graph(n, combinations(range(n), 2))


def complete_bipartite(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise InvalidSizeError(f"complete bipartite graph needs p, q >= 1, got ({p}, {q})")
    return new_graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return new_graph(10, outer + spokes + inner)


def disjoint_union(graphs) -> Graph:
    graphs = list(graphs)
    if not graphs:
        raise EmptyListError("disjoint_union needs at least one graph")
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return new_graph(offset, edges)


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n))
    if g.m:
        idx = np.array(g.edges)
        a[idx[:, 0], idx[:, 1]] = 1.0
        a[idx[:, 1], idx[:, 0]] = 1.0
    return a


def incidence_matrix(g: Graph) -> np.ndarray:
    """Vertex-by-edge 0/1 matrix; column j belongs to ``g.edges[j]``."""
    if g.m == 0:
        raise NoEdgesError("incidence matrix of an edgeless graph")
    q = np.zeros((g.n, g.m), dtype=np.int64)
    for j, (u, v) in enumerate(g.edges):
        q[u, j] = 1
        q[v, j] = 1
    return q


def line_graph(g: Graph) -> Graph:
    if g.m == 0:
        raise NoEdgesError("line graph of an edgeless graph")
    edges = []
    index = g.edge_index
    for v in range(g.n):
        incident = sorted(index[(min(v, w), max(v, w))] for w in g.neighbors[v])
        edges.extend(combinations(incident, 2))
    # a pair of edges shares at most one endpoint in a simple graph
    return new_graph(g.m, edges)


def central_graph(g: Graph) -> Graph:
    """Subdivide every edge and join every pair of non-adjacent vertices.

    Vertices ``0..n-1`` are the original ones, ``n + j`` subdivides edge j.
    The original edges are not kept.
    """
    edges = []
    for j, (u, v) in enumerate(g.edges):
        edges.append((u, g.n + j))
        edges.append((v, g.n + j))
    edges.extend((u, v) for u, v in combinations(range(g.n), 2) if not g.has_edge(u, v))
    return new_graph(g.n + g.m, edges)


def is_regular(g: Graph):
    """Return the common degree, or None when degrees differ."""
    if g.n == 0:
        return None
    d = g.degrees
    return d[0] if all(x == d[0] for x in d) else None


def triangle_count(g: Graph) -> int:
    count = 0
    for u, v in g.edges:
        count += sum(1 for w in g.neighbors[u] & g.neighbors[v] if w > v)
    return count


def is_triangle_free(g: Graph) -> bool:
    return all(not (g.neighbors[u] & g.neighbors[v]) for u, v in g.edges)


def every_edge_in_triangle(g: Graph) -> bool:
    return all(g.neighbors[u] & g.neighbors[v] for u, v in g.edges)


def components(g: Graph) -> list[list[int]]:
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g.neighbors[u]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g: Graph) -> bool:
    return g.n >= 1 and len(components(g)) == 1
