import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cvejoin.distance import all_pairs_distances
from cvejoin.errors import DisconnectedError, MissingRegularityError, NotRegularError, PreconditionViolatedError
from cvejoin.graph import (
    adjacency_matrix,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    line_graph,
    new_graph,
    petersen,
)
from cvejoin.join import CveParameters, cve_join
from cvejoin.spectral import (
    Spectrum,
    closed_form_d_spectrum,
    distance_energy,
    distance_spectrum,
    first_difference,
    line_graph_spectrum_numeric,
    line_graph_spectrum_oracle,
    max_deviation,
    quotient_matrix,
    spectra_equal,
    sym_eigenvalues,
)

from conftest import REGULAR_SUITE, floyd_warshall, numpy_eigs

SUITE_TRIPLES = [
    (cycle(4), complete(2), complete(2)),
    (cycle(6), cycle(3), complete(2)),
    (complete_bipartite(3, 3), cycle(4), cycle(5)),
    (petersen(), complete(3), cycle(4)),
]


def close(spectrum, expected, tol=1e-12):
    return np.allclose(spectrum.values, sorted(expected, reverse=True), atol=tol)


def test_sym_eigenvalue_examples():
    assert close(sym_eigenvalues(np.zeros((3, 3))), [0, 0, 0])
    assert close(sym_eigenvalues(adjacency_matrix(complete(4))), [3, -1, -1, -1])
    assert close(sym_eigenvalues(adjacency_matrix(cycle(4))), [2, 0, 0, -2])


@pytest.mark.parametrize("g, expected, energy", [
    (complete(2), [1, -1], 2),
    (complete(3), [2, -1, -1], 4),
    (cycle(4), [4, 0, -2, -2], 8),
])
def test_distance_spectrum_examples(g, expected, energy):
    assert close(distance_spectrum(g), expected)
    assert distance_energy(g) == pytest.approx(energy, abs=1e-12)


def test_distance_spectrum_disconnected():
    with pytest.raises(DisconnectedError):
        distance_spectrum(new_graph(2, []))


def test_spectrum_grouping():
    s = Spectrum.from_values([-2, 4, -2 + 1e-9, 0])
    assert s.values[0] == 4
    assert s.groups[0] == (4.0, 1) and s.groups[2][1] == 2
    assert s.multiplicity(-2) == 2 and s.multiplicity(1) == 0
    assert s.energy == pytest.approx(8, abs=1e-8)


def test_spectra_equal():
    s = distance_spectrum(cycle(5))
    assert spectra_equal(s, s, 0.0)
    assert not spectra_equal(distance_spectrum(cycle(4)), distance_spectrum(complete(4)), 1e-6)
    assert first_difference(distance_spectrum(cycle(4)), distance_spectrum(complete(4)), 1e-6) == 0
    assert max_deviation(s, distance_spectrum(cycle(4))) == math.inf


def test_quotient_examples(c4_join):
    q = quotient_matrix(c4_join.params)
    assert [list(r) for r in q.entries] == [[5, 6, 2, 4], [6, 6, 4, 2], [4, 8, 1, 6], [8, 4, 6, 1]]
    assert q.is_balanced()
    k33 = CveParameters.from_graphs(complete_bipartite(3, 3), cycle(3), complete(2))
    # rows 1-3 as listed; row 0 is n1-1+k1 = 8 and 2m1-k1 = 15 for n1=6, m1=9, k1=3
    assert [list(r) for r in quotient_matrix(k33).entries] == [
        [8, 15, 3, 4], [10, 16, 6, 2], [6, 18, 2, 6], [12, 9, 9, 1]]


@pytest.mark.parametrize("triple", SUITE_TRIPLES + [(complete_bipartite(3, 3), cycle(3), complete(2))])
def test_quotient_is_block_row_sum(triple):
    j = cve_join(*triple)
    d = floyd_warshall(j.graph)
    q = quotient_matrix(j.params)
    blocks = list(j.block_ranges.values())
    for i, bi in enumerate(blocks):
        for k, bk in enumerate(blocks):
            sums = d[bi.start:bi.stop, bk.start:bk.stop].sum(axis=1)
            assert set(sums.tolist()) == {q.entries[i][k]}


def test_quotient_needs_regularity():
    path = new_graph(3, [(0, 1), (1, 2)])
    with pytest.raises(MissingRegularityError):
        quotient_matrix(CveParameters.from_graphs(cycle(4), path, complete(2)))


@pytest.mark.parametrize("triple", SUITE_TRIPLES)
def test_closed_form_matches_numpy_oracle(triple):
    j = cve_join(*triple)
    oracle = numpy_eigs(floyd_warshall(j.graph))
    closed = closed_form_d_spectrum(*triple)
    assert len(closed) == j.graph.n
    assert np.abs(np.array(closed.values) - oracle).max() <= 1e-8
    assert max_deviation(closed, distance_spectrum(j.graph)) <= 1e-8


def test_closed_form_pieces():
    s = closed_form_d_spectrum(cycle(4), complete(2), complete(2))
    assert s.multiplicity(-3) == 3
    assert s.multiplicity(-1) == 2
    # K33 has m1 - n1 = 3 extra copies of -2
    k = closed_form_d_spectrum(complete_bipartite(3, 3), cycle(3), complete(2))
    assert k.multiplicity(-2) >= 3


@pytest.mark.parametrize("triple, reason", [
    ((complete(4), complete(2), complete(2)), "G1 not triangle-free"),
    ((new_graph(3, [(0, 1), (1, 2)]), complete(2), complete(2)), "G1 not regular"),
    ((cycle(4), new_graph(3, [(0, 1), (1, 2)]), complete(2)), "G2 not regular"),
    ((complete(2), complete(2), complete(2)), "k1 < 2"),
])
def test_closed_form_names_hypothesis(triple, reason):
    with pytest.raises(PreconditionViolatedError, match=reason):
        closed_form_d_spectrum(*triple)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["C4", "C5", "C6", "K33", "Petersen"]),
       st.integers(1, 4), st.integers(3, 6), st.integers(1, 4), st.booleans())
def test_closed_form_random_regular(g1_name, a, b, c, cyc):
    g2 = cycle(b) if cyc else complete(a)
    g3 = disjoint_union([complete(c)] * 2)
    j = cve_join(REGULAR_SUITE[g1_name], g2, g3)
    oracle = numpy_eigs(floyd_warshall(j.graph))
    assert np.abs(np.array(closed_form_d_spectrum(REGULAR_SUITE[g1_name], g2, g3).values) - oracle).max() <= 1e-8


def test_line_graph_examples():
    assert close(line_graph_spectrum_oracle(cycle(4)), [2, 0, 0, -2])
    assert close(line_graph_spectrum_oracle(complete(4)), [4, 0, 0, 0, -2, -2])  # octahedron
    assert line_graph_spectrum_oracle(petersen()).multiplicity(-2) >= 5
    with pytest.raises(NotRegularError):
        line_graph_spectrum_oracle(new_graph(3, [(0, 1), (1, 2)]))


@pytest.mark.parametrize("name", sorted(REGULAR_SUITE))
def test_line_graph_oracle(name):
    g = REGULAR_SUITE[name]
    ref = numpy_eigs(adjacency_matrix(line_graph(g)))
    assert np.abs(np.array(line_graph_spectrum_oracle(g).values) - ref).max() <= 1e-9
    assert max_deviation(line_graph_spectrum_oracle(g), line_graph_spectrum_numeric(g)) <= 1e-9


def test_line_graph_perfect_matching():
    # m < n: the deficit removes -2 eigenvalues
    g = disjoint_union([complete(2)] * 3)
    assert close(line_graph_spectrum_oracle(g), [0, 0, 0])


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 9))
def test_distance_matrix_properties(n):
    for g in (cycle(max(n, 3)), complete(n)):
        d = all_pairs_distances(g)
        assert np.array_equal(d, d.T) and not np.diag(d).any()
        s = distance_spectrum(g)
        assert len(s) == g.n and sum(m for _, m in s.groups) == g.n
        assert list(s.values) == sorted(s.values, reverse=True)
        assert abs(sum(s.values)) <= 1e-9 * g.n  # trace of D is zero
