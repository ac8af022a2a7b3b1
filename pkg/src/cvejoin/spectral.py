"""Spectra, distance energy and the closed-form distance spectrum of a CVE-join."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from . import formulas
from .distance import all_pairs_distances
from .eigen import sym_eigenvalues_array
from .errors import MissingRegularityError, NotRegularError, PreconditionViolatedError
from .graph import Graph, adjacency_matrix, is_connected, is_regular, is_triangle_free, line_graph
from .join import CveParameters

GROUP_TOL = 1e-6


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues sorted descending, grouped into multiplicities at ``tol``."""

    values: tuple[float, ...]
    tol: float = GROUP_TOL

    @classmethod
    def from_values(cls, values, tol=GROUP_TOL) -> "Spectrum":
        return cls(tuple(sorted((float(x) for x in values), reverse=True)), tol)

    def __len__(self):
        return len(self.values)

    @cached_property
    def groups(self) -> tuple[tuple[float, int], ...]:
        groups = []
        current: list[float] = []
        for x in self.values:
            if current and current[0] - x > self.tol:
                groups.append((math.fsum(current) / len(current), len(current)))
                current = []
            current.append(x)
        if current:
            groups.append((math.fsum(current) / len(current), len(current)))
        return tuple(groups)

    def multiplicity(self, value: float) -> int:
        return sum(mult for rep, mult in self.groups if abs(rep - value) <= self.tol)

    @property
    def energy(self) -> float:
        return math.fsum(abs(x) for x in self.values)


def sym_eigenvalues(m) -> Spectrum:
    return Spectrum.from_values(sym_eigenvalues_array(m))


@lru_cache(maxsize=4096)
def adjacency_spectrum(g: Graph) -> Spectrum:
    return sym_eigenvalues(adjacency_matrix(g))


@lru_cache(maxsize=4096)
def distance_spectrum(g: Graph) -> Spectrum:
    return sym_eigenvalues(all_pairs_distances(g))


def distance_energy(g: Graph) -> float:
    return distance_spectrum(g).energy


def spectra_equal(a: Spectrum, b: Spectrum, tol: float) -> bool:
    return len(a) == len(b) and first_difference(a, b, tol) is None


def first_difference(a: Spectrum, b: Spectrum, tol: float):
    """Index of the first sorted position where the spectra differ by more than ``tol``."""
    for i, (x, y) in enumerate(zip(a.values, b.values)):
        if abs(x - y) > tol:
            return i
    if len(a) != len(b):
        return min(len(a), len(b))
    return None


def max_deviation(a: Spectrum, b: Spectrum) -> float:
    if len(a) != len(b):
        return math.inf
    return max((abs(x - y) for x, y in zip(a.values, b.values)), default=0.0)


@dataclass(frozen=True)
class QuotientMatrix:
    """4x4 equitable quotient of the CVE-join distance matrix.

    ``entries[i][j]`` is the (constant) row sum of block i restricted to block
    j, blocks ordered V(G1), I(G1), V(G2), V(G3).
    """

    entries: tuple[tuple[int, ...], ...]
    block_sizes: tuple[int, int, int, int]

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    def symmetrized(self) -> np.ndarray:
        # size_i * q_ij is the total of block (i, j), symmetric in (i, j)
        b = np.array(self.block_sizes, dtype=np.float64)
        totals = self.as_array() * np.array(self.block_sizes)[:, None]
        return totals / np.sqrt(np.outer(b, b))

    def is_balanced(self) -> bool:
        totals = self.as_array() * np.array(self.block_sizes)[:, None]
        return bool(np.array_equal(totals, totals.T))

    def eigenvalues(self) -> Spectrum:
        return sym_eigenvalues(self.symmetrized())


def quotient_matrix(p: CveParameters) -> QuotientMatrix:
    if not p.regular:
        missing = [f"k{i}" for i in (1, 2, 3) if getattr(p, f"k{i}") is None]
        raise MissingRegularityError(f"quotient matrix needs regular factors (missing {', '.join(missing)})")
    v = p.variables()
    rows = tuple(tuple(formulas.evaluate(f"quotient.{i}.{j}", **v) for j in range(4)) for i in range(4))
    return QuotientMatrix(rows, (p.n1, p.m1, p.n2, p.n3))


def _nonprincipal(spectrum: Spectrum) -> tuple[float, ...]:
    # drop one copy of the largest eigenvalue (the degree, for a regular graph)
    return spectrum.values[1:]


def check_closed_form_spectrum(g1: Graph, g2: Graph, g3: Graph) -> None:
    """Raise PreconditionViolatedError naming the first failed hypothesis."""
    if g1.m == 0 or g2.n == 0 or g3.n == 0:
        raise PreconditionViolatedError("emptiness: G1 needs an edge and G2, G3 a vertex")
    k1 = is_regular(g1)
    if k1 is None:
        raise PreconditionViolatedError("regularity: G1 not regular")
    if is_regular(g2) is None:
        raise PreconditionViolatedError("regularity: G2 not regular")
    if is_regular(g3) is None:
        raise PreconditionViolatedError("regularity: G3 not regular")
    if not is_triangle_free(g1):
        raise PreconditionViolatedError("G1 not triangle-free")
    if k1 < 2:
        raise PreconditionViolatedError(f"k1 < 2: G1 is {k1}-regular")
    if not is_connected(g1):
        raise PreconditionViolatedError("G1 not connected")


def closed_form_d_spectrum(g1: Graph, g2: Graph, g3: Graph) -> Spectrum:
    """Distance spectrum of the CVE-join assembled from the factors' adjacency spectra."""
    check_closed_form_spectrum(g1, g2, g3)
    p = CveParameters.from_graphs(g1, g2, g3)
    v = p.variables()
    values = []
    for theta in _nonprincipal(adjacency_spectrum(g1)):
        center = formulas.evaluate("dspec.pair_center", theta=theta)
        radicand = formulas.evaluate("dspec.pair_radicand", theta=theta, k1=p.k1)
        half = formulas.evaluate("dspec.pair_scale") * math.sqrt(max(radicand, 0.0))
        values += [center + half, center - half]
    mult = formulas.evaluate("dspec.minus_two_mult", **v)
    values += [formulas.evaluate("dspec.minus_two_value")] * mult
    for g in (g2, g3):
        values += [formulas.evaluate("dspec.shifted", theta=t) for t in _nonprincipal(adjacency_spectrum(g))]
    values += quotient_matrix(p).eigenvalues().values
    return Spectrum.from_values(values)


def line_graph_spectrum_oracle(g: Graph) -> Spectrum:
    """Adjacency spectrum of the line graph of a regular graph, from the graph's own spectrum.

    When ``m < n`` (a perfect matching) the count ``m - n`` of -2 eigenvalues is
    negative; that many copies of -2 are removed from the other terms.
    """
    k = is_regular(g)
    if k is None:
        raise NotRegularError("line graph spectrum formula needs a regular graph")
    if g.m == 0:
        raise NotRegularError("line graph spectrum formula needs at least one edge")
    v = {"k": k, "n": g.n, "m": g.m}
    values = [formulas.evaluate("line.principal", **v)]
    values += [formulas.evaluate("line.shifted", theta=t, k=k) for t in _nonprincipal(adjacency_spectrum(g))]
    minus_two = formulas.evaluate("line.minus_two_value")
    mult = formulas.evaluate("line.minus_two_mult", **v)
    if mult >= 0:
        values += [minus_two] * mult
    else:
        for _ in range(-mult):
            j = min(range(len(values)), key=lambda i: abs(values[i] - minus_two))
            if abs(values[j] - minus_two) > GROUP_TOL:
                raise ValueError("fewer -2 eigenvalues than the size deficit m - n requires")
            values.pop(j)
    return Spectrum.from_values(values)


def line_graph_spectrum_numeric(g: Graph) -> Spectrum:
    return adjacency_spectrum(line_graph(g))
