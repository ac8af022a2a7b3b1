"""The built-in verification suite behind ``cvejoin verify-all``.

Each criterion compares a closed form against an independent numeric or
brute-force computation on a fixed set of instances. Numeric results are
cached per graph, so re-running the suite (as the mutation control does)
only re-evaluates the closed forms.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import formulas
from .distance import all_pairs_distances, eccentricities
from .eigen import sym_eigenvalues_array
from .equienergetic import (
    certify_family,
    cycle_union_family,
    variable_part_energy,
    variable_part_energy_numeric,
)
from .graph import (
    Graph,
    adjacency_matrix,
    complete,
    complete_bipartite,
    cycle,
    is_connected,
    is_triangle_free,
    new_graph,
    petersen,
)
from .indices import indices_definitional, verify_join_indices
from .join import cve_degree, cve_eccentricity, cve_join, cve_order, cve_size
from .spectral import (
    GROUP_TOL,
    closed_form_d_spectrum,
    distance_spectrum,
    line_graph_spectrum_numeric,
    line_graph_spectrum_oracle,
    max_deviation,
    quotient_matrix,
)

SPECTRUM_TOL = 1e-8
INDEX_TOL = 1e-9
LINE_GRAPH_TOL = 1e-9
EIGEN_REL_TOL = 1e-10
RANDOM_TRIALS = 240
RANDOM_SEED = 20240917


@dataclass(frozen=True)
class CheckResult:
    criterion: int
    name: str
    measured: float
    limit: float
    relation: str  # "<=", ">=" or "=="
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = (f"{status} [{self.criterion}] {self.name}: measured {self.measured:#.12g} "
                f"{self.relation} {self.limit:#.12g}")
        return text + (f" ({self.detail})" if self.detail else "")


def spectrum_triples():
    return [
        ("C4,K2,K2", (cycle(4), complete(2), complete(2))),
        ("C6,C3,K2", (cycle(6), cycle(3), complete(2))),
        ("K33,C4,C5", (complete_bipartite(3, 3), cycle(4), cycle(5))),
        ("Petersen,K3,C4", (petersen(), complete(3), cycle(4))),
    ]


def index_triples():
    return [
        ("C4,K2,K2", (cycle(4), complete(2), complete(2))),
        ("C6,C3,K2", (cycle(6), cycle(3), complete(2))),
        ("K33,C4,C5", (complete_bipartite(3, 3), cycle(4), cycle(5))),
        ("K4,K2,K2", (complete(4), complete(2), complete(2))),
        ("K3,C3,K2", (complete(3), cycle(3), complete(2))),
    ]


def check_closed_form_spectra():
    out = []
    for name, triple in spectrum_triples():
        join = cve_join(*triple)
        dev = max_deviation(closed_form_d_spectrum(*triple), distance_spectrum(join.graph))
        out.append(CheckResult(1, f"closed-form D-spectrum {name}", dev, SPECTRUM_TOL, "<=", dev <= SPECTRUM_TOL))
        q = quotient_matrix(join.params)
        d = all_pairs_distances(join.graph)
        worst = 0
        for i, bi in enumerate(join.block_ranges.values()):
            for j, bj in enumerate(join.block_ranges.values()):
                sums = d[bi.start:bi.stop, bj.start:bj.stop].sum(axis=1)
                worst = max(worst, int(np.abs(sums - q.entries[i][j]).max()))
        ok = worst == 0 and q.is_balanced()
        out.append(CheckResult(1, f"equitable quotient block sums {name}", worst, 0, "==", ok))
    return out


def check_minus_two_multiplicity():
    out = []
    for name, triple in spectrum_triples():
        g1 = triple[0]
        if g1.m <= g1.n:
            continue
        join = cve_join(*triple)
        need = formulas.evaluate("dspec.minus_two_mult", **join.params.variables())
        have = distance_spectrum(join.graph).multiplicity(-2.0)
        out.append(CheckResult(2, f"multiplicity of -2 {name}", have, need, ">=", have >= need,
                               f"grouping tol {GROUP_TOL:g}"))
    return out


def check_line_graph_spectrum():
    out = []
    for name, g in (("C4", cycle(4)), ("K4", complete(4)), ("K33", complete_bipartite(3, 3)),
                    ("Petersen", petersen())):
        dev = max_deviation(line_graph_spectrum_oracle(g), line_graph_spectrum_numeric(g))
        out.append(CheckResult(3, f"line-graph spectrum {name}", dev, LINE_GRAPH_TOL, "<=", dev <= LINE_GRAPH_TOL))
    return out


def check_equienergetic(a_values=range(3, 13)):
    out = []
    h1, h2 = cycle(4), complete(2)
    for a in a_values:
        family = cycle_union_family(h1, h2, a)
        order = family[0].graph.n
        tol = SPECTRUM_TOL * order
        cert = certify_family(family, tol=tol, spectrum_tol=1e-6)
        out.append(CheckResult(4, f"energy spread a={a} ({len(family)} members)", cert.energy_spread, tol, "<=",
                               cert.energy_spread <= tol))
        if len(family) >= 2:
            out.append(CheckResult(4, f"cospectral pairs a={a}", len(cert.cospectral_pairs), 0, "==",
                                   not cert.cospectral_pairs, "non-cospectral at 1e-6"))
        expected = variable_part_energy(a, 1, 2)
        dev = max(abs(variable_part_energy_numeric(m) - expected) for m in family)
        out.append(CheckResult(4, f"partition-independent energy a={a}", dev, INDEX_TOL, "<=", dev <= INDEX_TOL))
    return out


def check_indices():
    out = []
    for name, triple in index_triples():
        report = verify_join_indices(cve_join(*triple), INDEX_TOL)
        for c in report.checks:
            if c.closed_form is None:
                out.append(CheckResult(5, f"{c.name} {name}", math.inf, c.tolerance, "<=", False, c.note))
            else:
                out.append(CheckResult(5, f"{c.name} {name} [{report.branch}]", c.difference, c.tolerance,
                                       "<=" if c.tolerance else "==", bool(c.passed)))
    fig = indices_definitional(cve_join(cycle(4), complete(2), complete(2)).graph)
    for key, expected in (("wiener", 108), ("tau", 28), ("aveg", Fraction(7, 3))):
        got = fig[key].value
        out.append(CheckResult(5, f"C4,K2,K2 {key} = {expected}", abs(float(Fraction(got) - expected)), 0, "==",
                               got == expected))
    return out


def random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    return new_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def random_g1(rng: random.Random) -> Graph:
    while True:
        g = random_graph(rng, rng.randint(2, 7), rng.choice((0.3, 0.5, 0.7)))
        if g.m >= 1 and is_connected(g) and is_triangle_free(g):
            return g


def random_triples(trials=RANDOM_TRIALS, seed=RANDOM_SEED):
    rng = random.Random(seed)
    for t in range(trials):
        if t % 4 == 3:
            g1 = complete(3 + (t // 4) % 2)
        else:
            g1 = random_g1(rng)
        g2 = random_graph(rng, rng.randint(1, 5))
        g3 = random_graph(rng, rng.randint(1, 5))
        yield g1, g2, g3


def check_structure(trials=RANDOM_TRIALS, seed=RANDOM_SEED):
    failures = {"order/size": 0, "degrees": 0, "eccentricities": 0, "connected, diameter <= 3": 0}
    branches = {"triangle_free": 0, "otherwise": 0}
    for g1, g2, g3 in random_triples(trials, seed):
        join = cve_join(g1, g2, g3)
        branches[join.branch] += 1
        g = join.graph
        if cve_order(join.params) != g.n or cve_size(join.params) != g.m:
            failures["order/size"] += 1
        if any(cve_degree(join, v) != g.degrees[v] for v in range(g.n)):
            failures["degrees"] += 1
        if not is_connected(g):
            failures["connected, diameter <= 3"] += 1
            continue
        d = all_pairs_distances(g)
        if d.max() > 3:
            failures["connected, diameter <= 3"] += 1
        ecc = eccentricities(d)
        if any(cve_eccentricity(join, v) != ecc[v] for v in range(g.n)):
            failures["eccentricities"] += 1
    detail = f"{trials} trials: {branches['triangle_free']} triangle-free, {branches['otherwise']} K3/K4 base"
    return [CheckResult(6, f"structural {key}", count, 0, "==", count == 0, detail)
            for key, count in failures.items()]


def known_spectra(max_dim=500):
    """Matrices with closed-form spectra: (label, matrix, exact eigenvalues)."""
    dims = sorted({2, 3, 10, 100, max_dim})
    for n in dims:
        yield f"K{n} adjacency", adjacency_matrix(complete(n)), [n - 1.0] + [-1.0] * (n - 1)
    for n in dims:
        if n >= 3:
            exact = [2 * math.cos(2 * math.pi * j / n) for j in range(n)]
            yield f"C{n} adjacency", adjacency_matrix(cycle(n)), exact
    rng = np.random.default_rng(7)
    for n in (1, 50, max_dim):
        diag = rng.uniform(-100, 100, n)
        yield f"diagonal dim {n}", np.diag(diag), list(diag)


def check_eigensolver(max_dim=500):
    out = []
    for label, matrix, exact in known_spectra(max_dim):
        exact = np.sort(np.array(exact))[::-1]
        got = sym_eigenvalues_array(matrix)
        radius = max(1.0, float(np.abs(exact).max()))
        err = float(np.abs(got - exact).max())
        tol = EIGEN_REL_TOL * radius
        out.append(CheckResult(7, f"eigensolver {label}", err, tol, "<=", err <= tol))
    return out


CRITERIA = {
    1: check_closed_form_spectra,
    2: check_minus_two_multiplicity,
    3: check_line_graph_spectrum,
    4: check_equienergetic,
    5: check_indices,
    6: check_structure,
    7: check_eigensolver,
}


def run_suite(criteria=None) -> list[CheckResult]:
    """Run the selected criteria (all by default); an exception becomes a failed check."""
    results = []
    for key in sorted(criteria or CRITERIA):
        try:
            results.extend(CRITERIA[key]())
        except Exception as exc:  # a broken closed form must fail the suite, not crash it
            results.append(CheckResult(key, CRITERIA[key].__name__, math.nan, 0, "==", False,
                                       f"{type(exc).__name__}: {exc}"))
    return results
