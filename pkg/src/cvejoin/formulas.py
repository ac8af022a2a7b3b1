"""Closed forms for the CVE-join as flat polynomial coefficient tables.

Every closed form the library evaluates lives in ``FORMULAS`` as a list of
``(coefficient, monomial)`` terms, where the monomial is a space-separated
product of variable names (``""`` is the constant term). Keeping them as
data lets the verification suite perturb any single coefficient and check
that the perturbation is caught.

Variables: ``n1 m1 k1 n2 m2 k2 n3 m3 k3`` are the orders, sizes and degrees
of the three factors, ``t1`` the triangle count of the first factor,
``deg`` a vertex degree inside its own factor, ``theta`` an adjacency
eigenvalue, ``a`` the total length of a cycle union and ``n m k`` the order,
size and degree of a single regular graph.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from fractions import Fraction as F
from numbers import Rational

_GA = 2 * math.sqrt(6) / 5
_R2 = 1 / math.sqrt(2)

FORMULAS: dict[str, list[tuple]] = {
    "order": [(1, "n1"), (1, "m1"), (1, "n2"), (1, "n3")],
    "size": [(1, "m1"), (1, "m2"), (1, "m3"), (1, "n1 n2"), (1, "m1 n3"),
             (F(1, 2), "n1 n1"), (F(-1, 2), "n1")],

    "degree.V1": [(1, "n1"), (1, "n2"), (-1, "")],
    "degree.I": [(1, "n3"), (2, "")],
    "degree.V2": [(1, "deg"), (1, "n1")],
    "degree.V3": [(1, "deg"), (1, "m1")],

    "ecc.triangle_free.V1": [(2, "")],
    "ecc.triangle_free.I": [(2, "")],
    "ecc.triangle_free.V2": [(3, "")],
    "ecc.triangle_free.V3": [(3, "")],
    "ecc.otherwise": [(3, "")],

    # equitable quotient of the distance matrix, blocks V(G1), I(G1), V(G2), V(G3)
    "quotient.0.0": [(1, "n1"), (-1, ""), (1, "k1")],
    "quotient.0.1": [(2, "m1"), (-1, "k1")],
    "quotient.0.2": [(1, "n2")],
    "quotient.0.3": [(2, "n3")],
    "quotient.1.0": [(2, "n1"), (-2, "")],
    "quotient.1.1": [(2, "m1"), (-2, "")],
    "quotient.1.2": [(2, "n2")],
    "quotient.1.3": [(1, "n3")],
    "quotient.2.0": [(1, "n1")],
    "quotient.2.1": [(2, "m1")],
    "quotient.2.2": [(2, "n2"), (-1, "k2"), (-2, "")],
    "quotient.2.3": [(3, "n3")],
    "quotient.3.0": [(2, "n1")],
    "quotient.3.1": [(1, "m1")],
    "quotient.3.2": [(3, "n2")],
    "quotient.3.3": [(2, "n3"), (-1, "k3"), (-2, "")],

    # each non-principal theta of G1 gives center +- scale * sqrt(radicand)
    "dspec.pair_center": [(F(-3, 2), ""), (F(1, 2), "theta")],
    "dspec.pair_scale": [(F(1, 2), "")],
    "dspec.pair_radicand": [(1, "theta theta"), (6, "theta"), (1, ""), (4, "k1")],
    "dspec.minus_two_value": [(-2, "")],
    "dspec.minus_two_mult": [(1, "m1"), (-1, "n1")],
    "dspec.shifted": [(-1, "theta"), (-2, "")],

    "line.principal": [(2, "k"), (-2, "")],
    "line.shifted": [(1, "theta"), (1, "k"), (-2, "")],
    "line.minus_two_value": [(-2, "")],
    "line.minus_two_mult": [(1, "m"), (-1, "n")],

    "equienergetic.variable_part": [(2, "a"), (-1, "k2"), (2, "n2"), (-6, "")],

    # the t1 term extends the triangle-free expression: each triangle puts
    # three vertex/opposite-edge pairs at distance 3 instead of 2
    "wiener": [(F(1, 2), "n1 n1"), (F(-1, 2), "n1"), (1, "n2 n2"), (1, "n3 n3"),
               (1, "n1 n2"), (-1, "n2"), (-1, "n3"), (1, "m1 n3"), (1, "m1 m1"),
               (2, "n1 n3"), (2, "m1 n1"), (2, "m1 n2"), (-2, "m1"),
               (F(-1, 2), "n2 k2"), (F(-1, 2), "n3 k3"), (3, "n2 n3"), (3, "t1")],

    "xi_c.triangle_free": [(2, "n1 n1"), (5, "n1 n2"), (5, "m1 n3"), (-2, "n1"),
                           (4, "m1"), (6, "m2"), (6, "m3")],
    "xi_c.otherwise": [(3, "n1 n1"), (6, "n1 n2"), (6, "m1 n3"), (-3, "n1"),
                       (6, "m1"), (6, "m2"), (6, "m3")],
    "xi_ce.triangle_free": [(F(3, 6), "n1 n1"), (F(5, 6), "n1 n2"), (F(5, 6), "m1 n3"),
                            (F(6, 6), "m1"), (F(4, 6), "m2"), (F(4, 6), "m3"),
                            (F(-3, 6), "n1")],
    "xi_ce.otherwise": [(F(1, 3), "n1 n1"), (F(2, 3), "n1 n2"), (F(2, 3), "m1 n3"),
                        (F(-1, 3), "n1"), (F(2, 3), "m1"), (F(2, 3), "m2"),
                        (F(2, 3), "m3")],
    "tau.triangle_free": [(2, "n1"), (2, "m1"), (3, "n2"), (3, "n3")],
    "tau.otherwise": [(3, "n1"), (3, "n2"), (3, "n3"), (3, "m1")],
    "aveg.otherwise": [(3, "")],
    "M1.triangle_free": [(4, "n1"), (4, "m1"), (9, "n2"), (9, "n3")],
    "M1.otherwise": [(9, "n1"), (9, "n2"), (9, "n3"), (9, "m1")],
    "M2.triangle_free": [(4, "m1"), (9, "m2"), (9, "m3"), (2, "n1 n1"), (-2, "n1"),
                         (6, "n1 n2"), (6, "m1 n3")],
    "M2.otherwise": [(9, "m1"), (9, "m2"), (9, "m3"), (9, "n1 n2"), (9, "m1 n3"),
                     (F(9, 2), "n1 n1"), (F(-9, 2), "n1")],
    "GA4.triangle_free": [(1, "m1"), (1, "m2"), (1, "m3"), (_GA, "n1 n2"), (_GA, "m1 n3"),
                          (F(1, 2), "n1 n1"), (F(-1, 2), "n1")],
    "GA4.otherwise": [(1, "m1"), (1, "m2"), (1, "m3"), (1, "n1 n2"), (1, "m1 n3"),
                      (F(1, 2), "n1 n1"), (F(-1, 2), "n1")],
    "ABC5.triangle_free": [(F(2, 3), "m2"), (F(2, 3), "m3"), (_R2, "n1 n2"), (_R2, "m1 n3"),
                           (_R2, "m1"), (_R2 / 2, "n1 n1"), (-_R2 / 2, "n1")],
    "ABC5.otherwise": [(F(2, 3), "m1"), (F(2, 3), "m2"), (F(2, 3), "m3"), (F(2, 3), "n1 n2"),
                       (F(2, 3), "m1 n3"), (F(1, 3), "n1 n1"), (F(-1, 3), "n1")],
}


def evaluate(name: str, **variables):
    """Evaluate a table. Exact (int or Fraction) when all inputs are rational."""
    terms = []
    exact = True
    for coef, mono in FORMULAS[name]:
        value = coef
        for var in mono.split():
            value = value * variables[var]
        terms.append(value)
        exact = exact and isinstance(value, Rational)
    if not exact:
        return math.fsum(float(t) for t in terms)
    total = sum(terms, F(0))
    return int(total) if total.denominator == 1 else total


def variables_of(name: str) -> set[str]:
    return {v for _, mono in FORMULAS[name] for v in mono.split()}


def coefficient_sites():
    """Every ``(table, term index)`` pair, in a stable order."""
    return [(name, i) for name in sorted(FORMULAS) for i in range(len(FORMULAS[name]))]


@contextmanager
def perturbed(name: str, index: int, delta=1):
    """Temporarily add ``delta`` to one coefficient (mutation testing)."""
    table = FORMULAS[name]
    original = table[index]
    table[index] = (original[0] + delta, original[1])
    try:
        yield
    finally:
        table[index] = original
