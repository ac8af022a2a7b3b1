"""Report documents (JSON-ready dicts) and their text rendering.

Floats are rendered with 15 significant digits in text; JSON keeps the
shortest round-trip representation. Fractions become ``"p/q"`` strings.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction

from .equienergetic import FamilyCertificate, describe
from .graph import Graph
from .indices import IndexVerification
from .spectral import QuotientMatrix, Spectrum


def fmt(x) -> str:
    if isinstance(x, bool) or x is None:
        return str(x)
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x)
    return format(float(x), "#.15g")


def jsonable(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if hasattr(x, "item"):  # numpy scalar
        x = x.item()
    if isinstance(x, float) and not math.isfinite(x):
        return str(x)
    return x


def dumps(report: dict) -> str:
    return json.dumps(jsonable(report), indent=2) + "\n"


def graph_descriptor(label: str, source: str, g: Graph) -> dict:
    return {"label": label, "source": source, "description": describe(g)}


def spectrum_section(s: Spectrum) -> dict:
    return {
        "values": list(s.values),
        "groups": [{"value": v, "multiplicity": m} for v, m in s.groups],
        "grouping_tol": s.tol,
        "energy": s.energy,
    }


def spectrum_report(inputs, numeric: Spectrum, closed: Spectrum | None = None,
                    quotient: QuotientMatrix | None = None, deviation=None, tol=None) -> dict:
    report = {"command": "spectrum", "inputs": inputs, "order": len(numeric),
              "spectrum": spectrum_section(numeric), "energy": numeric.energy}
    if closed is not None:
        report["closed_form"] = spectrum_section(closed)
        report["quotient_matrix"] = [list(r) for r in quotient.entries]
        report["max_deviation"] = deviation
        report["checks"] = [{"name": "closed form vs numeric spectrum", "measured": deviation,
                             "tol": tol, "passed": deviation <= tol}]
    return report


def indices_report(inputs, v: IndexVerification) -> dict:
    return {
        "command": "indices",
        "inputs": inputs,
        "order": v.join.graph.n,
        "size": v.join.graph.m,
        "branch": v.branch if v.branch is not None else "n/a",
        "indices": [
            {"name": c.name, "definitional": c.definitional, "closed_form": c.closed_form,
             "difference": c.difference, "tol": c.tolerance, "passed": c.passed, "note": c.note}
            for c in v.checks
        ],
        "passed": v.passed,
    }


def equienergetic_report(inputs, cert: FamilyCertificate, spectra) -> dict:
    return {
        "command": "equienergetic",
        "inputs": inputs,
        "a": cert.a,
        "base_pair": list(cert.base_pair),
        "members": [
            {"partition": list(p.parts) if p else None, "energy": e, "order": len(s)}
            for (p, e), s in zip(cert.members, spectra)
        ],
        "energy_spread": cert.energy_spread,
        "tol": cert.tol,
        "spectrum_tol": cert.spectrum_tol,
        "cospectral_pairs": [list(p) for p in cert.cospectral_pairs],
        "witnesses": [{"pair": list(k), "index": w} for k, w in sorted(cert.witnesses.items())],
        "passed": cert.passed,
    }


def verify_report(results) -> dict:
    return {
        "command": "verify-all",
        "checks": [
            {"criterion": r.criterion, "name": r.name, "measured": r.measured, "limit": r.limit,
             "relation": r.relation, "passed": r.passed, "detail": r.detail}
            for r in results
        ],
        "passed": all(r.passed for r in results),
        "failures": sum(not r.passed for r in results),
    }


def _status(ok) -> str:
    return {True: "PASS", False: "FAIL", None: "n/a"}[ok]


def _inputs_text(inputs) -> list[str]:
    return [f"{i['label']}: {i['source']} ({i['description']})" for i in inputs]


def _spectrum_text(title: str, section: dict) -> list[str]:
    lines = [f"{title} ({len(section['values'])} values):"]
    lines += [f"  {fmt(g['value'])}  x{g['multiplicity']}" for g in section["groups"]]
    return lines


def render_spectrum(r: dict) -> str:
    lines = _inputs_text(r["inputs"]) + [f"order: {r['order']}"]
    lines += _spectrum_text("D-spectrum", r["spectrum"])
    lines.append(f"D-energy: {fmt(r['energy'])}")
    if "closed_form" in r:
        lines += _spectrum_text("closed-form D-spectrum", r["closed_form"])
        lines.append("quotient matrix:")
        lines += ["  " + " ".join(f"{x:>6}" for x in row) for row in r["quotient_matrix"]]
        c = r["checks"][0]
        lines.append(f"{_status(c['passed'])} {c['name']}: max deviation {fmt(c['measured'])} "
                     f"(tol {fmt(c['tol'])})")
    return "\n".join(lines) + "\n"


def render_indices(r: dict) -> str:
    lines = _inputs_text(r["inputs"])
    lines.append(f"join: order {r['order']}, size {r['size']}, branch {r['branch']}")
    header = f"{'index':<7} {'definitional':>22} {'closed form':>22} {'difference':>22} {'tol':>8}  result"
    lines += [header, "-" * len(header)]
    for row in r["indices"]:
        closed = fmt(row["closed_form"]) if row["closed_form"] is not None else "n/a"
        diff = fmt(row["difference"]) if row["difference"] is not None else "n/a"
        tol = "exact" if row["tol"] == 0 else f"{row['tol']:g}"
        line = (f"{row['name']:<7} {fmt(row['definitional']):>22} {closed:>22} {diff:>22} "
                f"{tol:>8}  {_status(row['passed'])}")
        if row["note"]:
            line += f"  ({row['note']})"
        lines.append(line)
    lines.append(f"overall: {_status(r['passed'])}")
    return "\n".join(lines) + "\n"


def render_equienergetic(r: dict) -> str:
    lines = _inputs_text(r["inputs"])
    lines.append(f"a = {r['a']}, {len(r['members'])} members, order {r['members'][0]['order']}")
    for i, m in enumerate(r["members"]):
        part = "{" + ",".join(map(str, m["partition"])) + "}" if m["partition"] else "?"
        lines.append(f"  [{i}] P = {part:<16} D-energy {fmt(m['energy'])}")
    lines.append(f"{_status(r['energy_spread'] <= r['tol'])} energy spread {fmt(r['energy_spread'])} "
                 f"(tol {fmt(r['tol'])})")
    for w in r["witnesses"]:
        i, j = w["pair"]
        lines.append(f"  members {i},{j} differ at sorted index {w['index']}")
    lines.append(f"{_status(not r['cospectral_pairs'])} non-cospectral pairs "
                 f"(tol {fmt(r['spectrum_tol'])}): {len(r['cospectral_pairs'])} cospectral")
    for i, j in r["cospectral_pairs"]:
        lines.append(f"  members {i},{j} are cospectral")
    lines.append(f"overall: {_status(r['passed'])}")
    return "\n".join(lines) + "\n"


def render_verify(results, max_failures: int = 10) -> str:
    lines = [r.line() for r in results]
    failed = [r for r in results if not r.passed]
    lines.append(f"{len(results) - len(failed)}/{len(results)} checks passed")
    if failed:
        lines.append(f"first {min(len(failed), max_failures)} failures:")
        lines += ["  " + r.line() for r in failed[:max_failures]]
    return "\n".join(lines) + "\n"
