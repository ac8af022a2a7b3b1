import itertools
import sys

import numpy as np
import pytest
from hypothesis import strategies as st

from cvejoin.graph import complete, complete_bipartite, cycle, new_graph, petersen


def floyd_warshall(g):
    """Independent distance oracle (no BFS)."""
    inf = 10**9
    d = np.full((g.n, g.n), inf, dtype=np.int64)
    np.fill_diagonal(d, 0)
    for u, v in g.edges:
        d[u, v] = d[v, u] = 1
    for k in range(g.n):
        d = np.minimum(d, d[:, [k]] + d[[k], :])
    return d


def numpy_eigs(matrix):
    return np.sort(np.linalg.eigvalsh(np.asarray(matrix, dtype=float)))[::-1]


def brute_triangles(g):
    return sum(1 for a, b, c in itertools.combinations(range(g.n), 3)
               if g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c))


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return new_graph(n, [p for p, keep in zip(pairs, mask) if keep])


@pytest.fixture
def c4():
    return cycle(4)


@pytest.fixture
def k2():
    return complete(2)


@pytest.fixture
def c4_join():
    from cvejoin.join import cve_join
    return cve_join(cycle(4), complete(2), complete(2))


REGULAR_SUITE = {
    "C4": cycle(4),
    "C5": cycle(5),
    "C6": cycle(6),
    "K4": complete(4),
    "K33": complete_bipartite(3, 3),
    "Petersen": petersen(),
}


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "ACCEPTANCE_LINES", None)
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(lines):
        terminalreporter.write_line(lines[key])
