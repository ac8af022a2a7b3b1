"""Eccentricity- and distance-based topological indices.

Two routes: straight from the definitions on any connected graph, and the
closed forms for a CVE-join in terms of the factor parameters. Rational
indices are kept as ``int``/``Fraction`` so the routes can be compared
exactly; GA4 and ABC5 are irrational and compared with a tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import formulas
from .distance import all_pairs_distances, eccentricities
from .errors import ClosedFormUnavailableError, MissingRegularityError, TooSmallError
from .graph import Graph
from .join import CveGraph, CveParameters, cve_join

INDEX_NAMES = ("xi_c", "xi_ce", "tau", "aveg", "M1", "M2", "GA4", "ABC5", "wiener")
REAL_INDICES = frozenset({"GA4", "ABC5"})
DEFAULT_TOL = 1e-9


@dataclass(frozen=True)
class IndexValue:
    value: object
    route: str  # "definitional" or "closed_form"


class IndexReport(dict):
    """Index name -> IndexValue."""

    def values_only(self) -> dict:
        return {k: v.value for k, v in self.items()}


def indices_definitional(g: Graph) -> IndexReport:
    if g.n < 2:
        raise TooSmallError("indices need at least two vertices")
    d = all_pairs_distances(g)
    ecc = eccentricities(d)
    deg = g.degrees
    tau = sum(ecc)
    values = {
        "xi_c": sum(dv * ev for dv, ev in zip(deg, ecc)),
        "xi_ce": sum((Fraction(dv, ev) for dv, ev in zip(deg, ecc)), Fraction(0)),
        "tau": tau,
        "aveg": Fraction(tau, g.n),
        "M1": sum(ev * ev for ev in ecc),
        "M2": sum(ecc[u] * ecc[v] for u, v in g.edges),
        "GA4": math.fsum(2 * math.sqrt(ecc[u] * ecc[v]) / (ecc[u] + ecc[v]) for u, v in g.edges),
        "ABC5": math.fsum(math.sqrt((ecc[u] + ecc[v] - 2) / (ecc[u] * ecc[v])) for u, v in g.edges),
        "wiener": Fraction(int(d.sum()), 2),
    }
    return IndexReport({k: IndexValue(_normalize(v), "definitional") for k, v in values.items()})


def _normalize(v):
    if isinstance(v, Fraction) and v.denominator == 1:
        return int(v)
    return v


def _gate(p: CveParameters):
    if p.n2 < 1 or p.n3 < 1:
        raise ClosedFormUnavailableError("closed forms need n2 >= 1 and n3 >= 1")


def _branch(triangle_free: bool) -> str:
    return "triangle_free" if triangle_free else "otherwise"


def wiener_closed_form(p: CveParameters) -> int:
    """Wiener index of the join; ``p.t1`` adds one unit per vertex/opposite-edge triangle pair."""
    _gate(p)
    if p.k2 is None or p.k3 is None:
        raise MissingRegularityError("Wiener closed form needs regular G2 and G3")
    return formulas.evaluate("wiener", **p.variables())


def xi_c_closed_form(p: CveParameters, triangle_free: bool) -> int:
    _gate(p)
    return formulas.evaluate(f"xi_c.{_branch(triangle_free)}", **p.variables())


def xi_ce_closed_form(p: CveParameters, triangle_free: bool):
    _gate(p)
    return formulas.evaluate(f"xi_ce.{_branch(triangle_free)}", **p.variables())


def tau_closed_form(p: CveParameters, triangle_free: bool) -> int:
    _gate(p)
    return formulas.evaluate(f"tau.{_branch(triangle_free)}", **p.variables())


def aveg_closed_form(p: CveParameters, triangle_free: bool):
    _gate(p)
    if triangle_free:
        return _normalize(Fraction(tau_closed_form(p, True), formulas.evaluate("order", **p.variables())))
    return formulas.evaluate("aveg.otherwise")


def zagreb_closed_form(p: CveParameters, triangle_free: bool) -> tuple[int, int]:
    _gate(p)
    b = _branch(triangle_free)
    v = p.variables()
    return formulas.evaluate(f"M1.{b}", **v), formulas.evaluate(f"M2.{b}", **v)


def ga4_closed_form(p: CveParameters, triangle_free: bool) -> float:
    _gate(p)
    return float(formulas.evaluate(f"GA4.{_branch(triangle_free)}", **p.variables()))


def abc5_closed_form(p: CveParameters, triangle_free: bool) -> float:
    _gate(p)
    return float(formulas.evaluate(f"ABC5.{_branch(triangle_free)}", **p.variables()))


def closed_form(name: str, p: CveParameters, triangle_free: bool):
    if name == "wiener":
        return wiener_closed_form(p)
    if name == "M1":
        return zagreb_closed_form(p, triangle_free)[0]
    if name == "M2":
        return zagreb_closed_form(p, triangle_free)[1]
    fn = {
        "xi_c": xi_c_closed_form,
        "xi_ce": xi_ce_closed_form,
        "tau": tau_closed_form,
        "aveg": aveg_closed_form,
        "GA4": ga4_closed_form,
        "ABC5": abc5_closed_form,
    }[name]
    return fn(p, triangle_free)


def indices_closed_form(g: CveGraph) -> IndexReport:
    """Every closed form that applies to ``g``; unavailable ones are left out."""
    out = IndexReport()
    for name in INDEX_NAMES:
        try:
            out[name] = IndexValue(_closed_for(g, name), "closed_form")
        except ClosedFormUnavailableError:
            pass
    return out


def _closed_for(g: CveGraph, name: str):
    if name != "wiener" and g.branch is None:
        raise ClosedFormUnavailableError("G1 has triangles but not every edge lies on one")
    return closed_form(name, g.params, g.g1_triangle_free)


@dataclass(frozen=True)
class IndexCheck:
    name: str
    definitional: object
    closed_form: object  # None when unavailable
    difference: float | None
    passed: bool | None  # None when there is nothing to compare
    tolerance: float  # 0.0 means exact comparison
    note: str = ""


@dataclass(frozen=True)
class IndexVerification:
    join: CveGraph
    checks: tuple[IndexCheck, ...]

    @property
    def branch(self):
        return self.join.branch

    @property
    def passed(self) -> bool:
        return all(c.passed is not False for c in self.checks)


def compare_index(name: str, definitional, closed, tol: float = DEFAULT_TOL) -> IndexCheck:
    if name in REAL_INDICES:
        diff = abs(float(definitional) - float(closed))
        return IndexCheck(name, definitional, closed, diff, diff <= tol, tol)
    diff = abs(float(Fraction(definitional) - Fraction(closed)))
    return IndexCheck(name, definitional, closed, diff, Fraction(definitional) == Fraction(closed), 0.0)


def verify_join_indices(g: CveGraph, tol: float = DEFAULT_TOL) -> IndexVerification:
    definitional = indices_definitional(g.graph)
    checks = []
    for name in INDEX_NAMES:
        dv = definitional[name].value
        try:
            cv = _closed_for(g, name)
        except ClosedFormUnavailableError as exc:
            checks.append(IndexCheck(name, dv, None, None, None, tol if name in REAL_INDICES else 0.0, str(exc)))
            continue
        checks.append(compare_index(name, dv, cv, tol))
    return IndexVerification(g, tuple(checks))


def verify_indices(g1: Graph, g2: Graph, g3: Graph, tol: float = DEFAULT_TOL) -> IndexVerification:
    return verify_join_indices(cve_join(g1, g2, g3), tol)
