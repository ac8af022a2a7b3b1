"""The central vertex-edge join of three graphs and its structural closed forms.

Vertex layout of the joined graph is ``[V(G1) | I(G1) | V(G2) | V(G3)]``
where ``I(G1)`` holds one vertex per edge of G1, in G1's canonical edge
order.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

from . import formulas
from .distance import all_pairs_distances, eccentricities
from .errors import (
    ClosedFormUnavailableError,
    ConstructionError,
    EmptyEdgeSetG1Error,
    EmptyG2Error,
    EmptyG3Error,
    VertexOutOfRangeError,
)
from .graph import (
    Graph,
    central_graph,
    every_edge_in_triangle,
    is_connected,
    is_regular,
    is_triangle_free,
    new_graph,
    triangle_count,
)

log = logging.getLogger(__name__)

BLOCKS = ("V1", "I", "V2", "V3")


@dataclass(frozen=True)
class CveParameters:
    n1: int
    m1: int
    n2: int
    m2: int
    n3: int
    m3: int
    k1: int | None = None
    k2: int | None = None
    k3: int | None = None
    t1: int = 0

    def __post_init__(self):
        if self.n1 < 2 or self.m1 < 1:
            raise ValueError(f"G1 needs n1 >= 2 and m1 >= 1, got n1={self.n1}, m1={self.m1}")
        for name in ("n2", "m2", "n3", "m3", "t1"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be non-negative")
        for i in (1, 2, 3):
            n, m, k = getattr(self, f"n{i}"), getattr(self, f"m{i}"), getattr(self, f"k{i}")
            if k is not None and n * k != 2 * m:
                raise ValueError(f"n{i}*k{i} = {n * k} but 2*m{i} = {2 * m}")

    @classmethod
    def from_graphs(cls, g1: Graph, g2: Graph, g3: Graph) -> "CveParameters":
        return cls(g1.n, g1.m, g2.n, g2.m, g3.n, g3.m,
                   is_regular(g1), is_regular(g2), is_regular(g3), triangle_count(g1))

    @property
    def regular(self) -> bool:
        return None not in (self.k1, self.k2, self.k3)

    def variables(self) -> dict[str, int]:
        names = ("n1", "m1", "n2", "m2", "n3", "m3", "k1", "k2", "k3", "t1")
        return {k: getattr(self, k) for k in names if getattr(self, k) is not None}


@dataclass(frozen=True)
class CveGraph:
    graph: Graph
    params: CveParameters
    g1: Graph
    g2: Graph
    g3: Graph
    g1_triangle_free: bool
    # every edge of G1 lies on a triangle; the all-3 eccentricity case needs it
    g1_triangle_covered: bool
    discrepancies: tuple[str, ...] = field(default=(), compare=False)

    @property
    def block_ranges(self) -> dict[str, range]:
        p = self.params
        starts = (0, p.n1, p.n1 + p.m1, p.n1 + p.m1 + p.n2, p.n1 + p.m1 + p.n2 + p.n3)
        return {name: range(starts[i], starts[i + 1]) for i, name in enumerate(BLOCKS)}

    def block_of(self, v: int) -> str:
        for name, r in self.block_ranges.items():
            if v in r:
                return name
        raise VertexOutOfRangeError(f"vertex {v} outside 0..{self.graph.n - 1}")

    @property
    def closed_forms_available(self) -> bool:
        return self.params.n2 >= 1 and self.params.n3 >= 1

    @property
    def branch(self) -> str | None:
        """``"triangle_free"``, ``"otherwise"`` or None when neither closed-form case applies."""
        if self.g1_triangle_free:
            return "triangle_free"
        if self.g1_triangle_covered:
            return "otherwise"
        return None


def cve_join(g1: Graph, g2: Graph, g3: Graph, *, allow_degenerate=False, verify=False) -> CveGraph:
    """Build the CVE-join of ``g1`` with ``g2`` (on vertices) and ``g3`` (on edges).

    ``allow_degenerate`` permits an empty ``g2`` or ``g3``; the closed forms then
    raise :class:`ClosedFormUnavailableError`. With ``verify`` the structural
    closed forms are compared against the constructed graph and any mismatch is
    logged and recorded in ``discrepancies``.
    """
    if g1.m == 0:
        raise EmptyEdgeSetG1Error("G1 must have at least one edge")
    if not is_connected(g1):
        raise ConstructionError("G1 must be connected")
    if not allow_degenerate:
        if g2.n == 0:
            raise EmptyG2Error("G2 must have at least one vertex")
        if g3.n == 0:
            raise EmptyG3Error("G3 must have at least one vertex")

    n1, m1 = g1.n, g1.m
    off2 = n1 + m1
    off3 = off2 + g2.n
    edges = list(central_graph(g1).edges)
    edges += [(u + off2, v + off2) for u, v in g2.edges]
    edges += [(u + off3, v + off3) for u, v in g3.edges]
    edges += [(u, off2 + w) for u in range(n1) for w in range(g2.n)]
    edges += [(n1 + j, off3 + w) for j in range(m1) for w in range(g3.n)]
    graph = new_graph(off3 + g3.n, edges)

    result = CveGraph(graph, CveParameters.from_graphs(g1, g2, g3), g1, g2, g3,
                      is_triangle_free(g1), every_edge_in_triangle(g1))
    if verify:
        found = tuple(closed_form_discrepancies(result))
        for msg in found:
            log.warning("closed form disagrees with construction: %s", msg)
        object.__setattr__(result, "discrepancies", found)
    return result


def cve_order(p: CveParameters) -> int:
    return formulas.evaluate("order", **p.variables())


def cve_size(p: CveParameters) -> int:
    return formulas.evaluate("size", **p.variables())


def cve_degree(g: CveGraph, v: int) -> int:
    block = g.block_of(v)
    local = v - g.block_ranges[block].start
    variables = g.params.variables()
    if block == "V2":
        variables["deg"] = g.g2.degrees[local]
    elif block == "V3":
        variables["deg"] = g.g3.degrees[local]
    return formulas.evaluate(f"degree.{block}", **variables)


def cve_eccentricity(g: CveGraph, v: int) -> int:
    block = g.block_of(v)
    if not g.closed_forms_available:
        raise ClosedFormUnavailableError("eccentricity closed form needs n2 >= 1 and n3 >= 1")
    if g.branch == "triangle_free":
        return formulas.evaluate(f"ecc.triangle_free.{block}")
    if g.branch == "otherwise":
        return formulas.evaluate("ecc.otherwise")
    raise ClosedFormUnavailableError(
        "G1 has a triangle but also an edge on no triangle; vertices off the "
        "triangles have eccentricity 2, so neither closed-form case holds")


def closed_form_discrepancies(g: CveGraph) -> list[str]:
    """Compare order, size, degrees and eccentricities against the built graph."""
    out = []
    if cve_order(g.params) != g.graph.n:
        out.append(f"order: formula {cve_order(g.params)}, graph {g.graph.n}")
    if cve_size(g.params) != g.graph.m:
        out.append(f"size: formula {cve_size(g.params)}, graph {g.graph.m}")
    for v in range(g.graph.n):
        if cve_degree(g, v) != g.graph.degrees[v]:
            out.append(f"degree of {v}: formula {cve_degree(g, v)}, graph {g.graph.degrees[v]}")
    if g.closed_forms_available and g.branch is not None:
        ecc = eccentricities(all_pairs_distances(g.graph))
        for v in range(g.graph.n):
            if cve_eccentricity(g, v) != ecc[v]:
                out.append(f"eccentricity of {v}: formula {cve_eccentricity(g, v)}, BFS {ecc[v]}")
    return out
