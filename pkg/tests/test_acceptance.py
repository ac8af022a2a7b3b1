"""Acceptance criteria 1-8, one test per criterion.

Each test prints (and records for the terminal summary) a single line
``criterion N: PASS|FAIL ...``. Run standalone with
``python3 tests/test_acceptance.py`` to get just those lines.
"""

import math
import subprocess
import sys
import time

import pytest

from cvejoin import formulas
from cvejoin.verify import (
    EIGEN_REL_TOL,
    INDEX_TOL,
    LINE_GRAPH_TOL,
    RANDOM_TRIALS,
    SPECTRUM_TOL,
    check_closed_form_spectra,
    check_eigensolver,
    check_equienergetic,
    check_indices,
    check_line_graph_spectrum,
    check_minus_two_multiplicity,
    check_structure,
    run_suite,
)

ACCEPTANCE_LINES = {}


def report(criterion, ok, summary):
    line = f"criterion {criterion}: {'PASS' if ok else 'FAIL'} {summary}"
    ACCEPTANCE_LINES[criterion] = line
    print(line)
    return line


def timed(fn):
    start = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - start


def _worst(results):
    finite = [r.measured for r in results if math.isfinite(r.measured)]
    return max(finite, default=math.nan)


def _failures(results):
    return [r.line() for r in results if not r.passed]


def test_criterion_1_closed_form_spectrum():
    results, secs = timed(check_closed_form_spectra)
    spectra = [r for r in results if r.name.startswith("closed-form")]
    ok = len(spectra) == 4 and all(r.passed for r in results) and secs < 5
    report(1, ok, f"4 triples, max deviation {_worst(spectra):.3e} <= {SPECTRUM_TOL:g}, "
                  f"quotient block sums exact, {secs:.2f} s < 5 s")
    assert ok, _failures(results)


def test_criterion_2_minus_two_multiplicity():
    results = check_minus_two_multiplicity()
    found = {r.name.split()[-1].split(",")[0]: (r.measured, r.limit) for r in results}
    ok = set(found) == {"K33", "Petersen"} and all(r.passed for r in results)
    text = ", ".join(f"{k} {int(have)} >= {int(need)}" for k, (have, need) in sorted(found.items()))
    report(2, ok, f"multiplicity of -2 at grouping 1e-6: {text}")
    assert ok, _failures(results)


def test_criterion_3_line_graph_spectrum():
    results = check_line_graph_spectrum()
    ok = len(results) == 4 and all(r.passed for r in results)
    report(3, ok, f"C4, K4, K33, Petersen, max deviation {_worst(results):.3e} <= {LINE_GRAPH_TOL:g}")
    assert ok, _failures(results)


def test_criterion_4_equienergetic_families():
    results, secs = timed(check_equienergetic)
    spreads = [r for r in results if r.name.startswith("energy spread")]
    cospectral = [r for r in results if r.name.startswith("cospectral")]
    variable = [r for r in results if r.name.startswith("partition-independent")]
    ok = len(spreads) == 10 and all(r.passed for r in results) and secs < 30
    report(4, ok, f"a = 3..12: worst spread {_worst(spreads):.3e} (tol 1e-8*order), "
                  f"{len(cospectral)} multi-member families with 0 cospectral pairs at 1e-6, "
                  f"variable part within {_worst(variable):.1e} <= {INDEX_TOL:g}, {secs:.2f} s < 30 s")
    assert ok, _failures(results)


def test_criterion_5_index_closed_forms():
    results = check_indices()
    exact = [r for r in results if r.relation == "=="]
    real = [r for r in results if r.relation == "<="]
    ok = len(results) == 5 * 9 + 3 and all(r.passed for r in results)
    report(5, ok, f"5 triples x 9 indices: {sum(r.passed for r in exact)}/{len(exact)} exact, "
                  f"GA4/ABC5 max diff {_worst(real):.3e} <= {INDEX_TOL:g}; W=108, tau=28, aveg=7/3")
    assert ok, _failures(results)


def test_criterion_6_structural_identities():
    results = check_structure()
    ok = RANDOM_TRIALS >= 200 and all(r.passed for r in results)
    total = sum(int(r.measured) for r in results)
    report(6, ok, f"{results[0].detail}; {total} failures over order/size, degrees, eccentricities")
    assert ok, _failures(results)


def test_criterion_7_eigensolver():
    results = check_eigensolver(500)
    rel = max(r.measured / (r.limit / EIGEN_REL_TOL) for r in results)
    ok = all(r.passed for r in results)
    report(7, ok, f"{len(results)} matrices up to dim 500, worst error/max(1,rho) {rel:.3e} <= {EIGEN_REL_TOL:g}")
    assert ok, _failures(results)


def _mutation_sweep():
    """Perturb every closed-form coefficient by +1 and rerun criteria 1-6."""
    undetected = []
    sites = formulas.coefficient_sites()
    for name, index in sites:
        with formulas.perturbed(name, index, 1):
            if all(r.passed for r in run_suite(range(1, 7))):
                undetected.append(f"{name}:{index}")
    return sites, undetected


def test_criterion_8_verify_all_and_mutation_control():
    proc, secs = timed(lambda: subprocess.run(
        [sys.executable, "-m", "cvejoin", "verify-all"], capture_output=True, text=True, check=False))
    fresh_ok = proc.returncode == 0 and secs < 60
    mutant = subprocess.run([sys.executable, "-m", "cvejoin", "verify-all", "--mutate", "wiener:0"],
                            capture_output=True, text=True, check=False)
    (sites, undetected), sweep_secs = timed(_mutation_sweep)
    ok = fresh_ok and mutant.returncode != 0 and not undetected
    report(8, ok, f"verify-all exit {proc.returncode} in {secs:.1f} s < 60 s; --mutate exit {mutant.returncode}; "
                  f"{len(sites) - len(undetected)}/{len(sites)} single +1 coefficient mutations caught "
                  f"({sweep_secs:.1f} s)")
    assert fresh_ok, proc.stdout[-2000:] + proc.stderr[-2000:]
    assert mutant.returncode != 0
    assert not undetected, undetected


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for t in tests:
        try:
            t()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
