"""Distance-equienergetic families built from unions of cycles.

For a fixed total ``a`` every partition of ``a`` into parts of size at least
three gives a union of cycles ``C_P``; joining it on the vertex side of a
fixed base graph ``H1`` (with ``H2`` on the edge side) yields graphs of the
same order and the same distance energy, with pairwise different spectra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from . import formulas
from .errors import H1NotEligibleError, H2LeastEigTooSmallError, H2NotEligibleError, MixedOrdersError, TooSmallError
from .graph import Graph, components, cycle, disjoint_union, is_connected, is_regular, is_triangle_free
from .join import CveGraph, cve_join
from .spectral import adjacency_spectrum, distance_spectrum, first_difference

LEAST_EIG_SLACK = 1e-8


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        if any(p < 3 for p in self.parts):
            raise ValueError(f"every part must be at least 3: {self.parts}")
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError(f"parts must be descending: {self.parts}")

    @property
    def total(self) -> int:
        return sum(self.parts)

    def __str__(self):
        return "{" + ",".join(map(str, self.parts)) + "}"


def _partitions(total: int, largest: int):
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 2, -1):
        rest = total - first
        if rest == 0 or rest >= 3:
            for tail in _partitions(rest, first):
                yield (first,) + tail


def partitions_min3(a: int) -> list[Partition]:
    """Partitions of ``a`` with all parts >= 3, in descending lexicographic order."""
    if a < 3:
        raise TooSmallError(f"partitions with parts >= 3 need a >= 3, got {a}")
    return [Partition(p) for p in _partitions(a, a)]


def cp_graph(partition: Partition) -> Graph:
    return disjoint_union(cycle(p) for p in partition.parts)


def cycle_union_partition(g: Graph):
    """Recover the partition when ``g`` is a disjoint union of cycles, else None."""
    if is_regular(g) != 2:
        return None
    sizes = sorted((len(c) for c in components(g)), reverse=True)
    return Partition(tuple(sizes))


def check_h1(h1: Graph) -> int:
    k1 = is_regular(h1)
    if not is_connected(h1):
        raise H1NotEligibleError("H1 not connected")
    if k1 is None:
        raise H1NotEligibleError("H1 not regular")
    if k1 < 2:
        raise H1NotEligibleError(f"H1 is {k1}-regular, needs degree >= 2")
    if not is_triangle_free(h1):
        raise H1NotEligibleError("H1 not triangle-free")
    return k1


def check_h2(h2: Graph) -> int:
    k2 = is_regular(h2)
    if k2 is None:
        raise H2NotEligibleError("H2 not regular")
    least = adjacency_spectrum(h2).values[-1]
    if least < -2 - LEAST_EIG_SLACK:
        raise H2LeastEigTooSmallError(f"H2 least adjacency eigenvalue {least:.12g} < -2")
    return k2


def cycle_union_family(h1: Graph, h2: Graph, a: int) -> list[CveGraph]:
    """One CVE-join ``H1 ▷ (C_P on vertices, H2 on edges)`` per partition of ``a``."""
    check_h1(h1)
    check_h2(h2)
    return [cve_join(h1, cp_graph(p), h2) for p in partitions_min3(a)]


def variable_part_energy(a: int, k2: int, n2: int):
    """Energy carried by the cycle-union and H2 eigenvalues; independent of the partition."""
    if a < 3:
        raise TooSmallError(f"a must be at least 3, got {a}")
    return formulas.evaluate("equienergetic.variable_part", a=a, k2=k2, n2=n2)


def variable_part_energy_numeric(member: CveGraph) -> float:
    """The same quantity summed directly from adjacency spectra of ``C_P`` and ``H2``."""
    total = 0.0
    for g in (member.g2, member.g3):
        total += sum(abs(-t - 2) for t in adjacency_spectrum(g).values[1:])
    return total


@dataclass
class FamilyCertificate:
    a: int | None
    base_pair: tuple[str, str]
    members: list[tuple[Partition | None, float]]
    energy_spread: float
    cospectral_pairs: list[tuple[int, int]]
    tol: float
    spectrum_tol: float
    # pair -> first sorted index where the two spectra differ beyond spectrum_tol
    witnesses: dict[tuple[int, int], int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.energy_spread <= self.tol and not self.cospectral_pairs


def describe(g: Graph) -> str:
    k = is_regular(g)
    reg = f", {k}-regular" if k is not None else ""
    return f"n={g.n}, m={g.m}{reg}"


def certify_family(family: list[CveGraph], tol: float = 1e-8, spectrum_tol: float | None = None) -> FamilyCertificate:
    """Check equal distance energy and pairwise non-cospectrality.

    ``tol`` bounds the energy spread; ``spectrum_tol`` (default ``tol``) is the
    threshold below which two sorted spectra count as equal.
    """
    if not family:
        raise ValueError("empty family")
    if spectrum_tol is None:
        spectrum_tol = tol
    orders = {g.graph.n for g in family}
    if len(orders) > 1:
        raise MixedOrdersError(f"family members have different orders: {sorted(orders)}")
    spectra = [distance_spectrum(g.graph) for g in family]
    energies = [s.energy for s in spectra]
    cospectral, witnesses = [], {}
    for i, j in combinations(range(len(family)), 2):
        w = first_difference(spectra[i], spectra[j], spectrum_tol)
        if w is None:
            cospectral.append((i, j))
        else:
            witnesses[(i, j)] = w
    partitions = [cycle_union_partition(g.g2) for g in family]
    totals = {p.total for p in partitions if p is not None}
    return FamilyCertificate(
        a=totals.pop() if len(totals) == 1 and None not in partitions else None,
        base_pair=(describe(family[0].g1), describe(family[0].g3)),
        members=list(zip(partitions, energies)),
        energy_spread=max(energies) - min(energies),
        cospectral_pairs=cospectral,
        tol=tol,
        spectrum_tol=spectrum_tol,
        witnesses=witnesses,
    )
