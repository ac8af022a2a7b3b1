import numpy as np
import pytest
from hypothesis import given, settings

from cvejoin.distance import all_pairs_distances, eccentricities, eccentricity, transmission
from cvejoin.errors import DisconnectedError, VertexOutOfRangeError
from cvejoin.graph import complete, cycle, is_connected, new_graph, petersen

from conftest import floyd_warshall, graphs


def test_cycle_distances():
    d = all_pairs_distances(cycle(4))
    assert d.tolist() == [[0, 1, 2, 1], [1, 0, 1, 2], [2, 1, 0, 1], [1, 2, 1, 0]]
    assert eccentricity(d, 0) == 2 and transmission(d, 0) == 4
    assert eccentricities(all_pairs_distances(petersen())) == [2] * 10
    assert all_pairs_distances(complete(1)).tolist() == [[0]]


def test_read_only():
    d = all_pairs_distances(cycle(5))
    with pytest.raises(ValueError):
        d[0, 1] = 7


def test_disconnected_names_pair():
    with pytest.raises(DisconnectedError) as info:
        all_pairs_distances(new_graph(3, [(0, 1)]))
    assert {info.value.u, info.value.v} & {2}


def test_vertex_range():
    d = all_pairs_distances(cycle(3))
    with pytest.raises(VertexOutOfRangeError):
        eccentricity(d, 3)
    with pytest.raises(VertexOutOfRangeError):
        transmission(d, -1)


@settings(max_examples=120, deadline=None)
@given(graphs(min_n=1, max_n=9))
def test_bfs_matches_floyd_warshall(g):
    if not is_connected(g):
        with pytest.raises(DisconnectedError):
            all_pairs_distances(g)
        return
    d = all_pairs_distances(g)
    assert np.array_equal(d, floyd_warshall(g))
    assert np.array_equal(d, d.T)
