"""Command-line interface.

Graph arguments are edge-list file paths or ``builtin:<name>`` (see
``cvejoin.edgelist.builtin_graph``). Exit status: 0 success, 1 a
verification failed, 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import formulas, report
from .edgelist import format_edge_list, read_graph
from .equienergetic import certify_family, cycle_union_family
from .errors import CveError
from .indices import DEFAULT_TOL as INDEX_TOL
from .indices import verify_indices
from .join import cve_join
from .spectral import (
    closed_form_d_spectrum,
    distance_spectrum,
    max_deviation,
    quotient_matrix,
)
from .verify import run_suite

SPECTRUM_TOL = 1e-8
EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _load(source: str, label: str):
    try:
        return read_graph(source)
    except OSError as exc:
        raise InputError(f"{label}: cannot read {source}: {exc.strerror or exc}") from exc
    except CveError as exc:
        raise InputError(f"{label}: {exc}") from exc


def _emit(args, text: str, doc: dict) -> None:
    out = report.dumps(doc) if getattr(args, "json", False) else text
    if getattr(args, "out", None):
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)


def _inputs(pairs):
    return [report.graph_descriptor(label, src, g) for label, src, g in pairs]


def cmd_construct(args) -> int:
    g1, g2, g3 = (_load(s, f"G{i}") for i, s in enumerate(args.graphs, start=1))
    join = cve_join(g1, g2, g3)
    blocks = ", ".join(f"{name} {r.start}-{r.stop - 1}" if len(r) else f"{name} empty"
                       for name, r in zip(("V(G1)", "I(G1)", "V(G2)", "V(G3)"), join.block_ranges.values()))
    comments = [f"CVE-join of {' '.join(args.graphs)}", f"blocks: {blocks}"]
    text = format_edge_list(join.graph, comments)
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_spectrum(args) -> int:
    if len(args.graphs) not in (1, 3):
        raise InputError("spectrum takes one graph or a triple G1 G2 G3")
    if args.closed_form and len(args.graphs) != 3:
        raise InputError("--closed-form needs a triple G1 G2 G3")
    labels = ["G"] if len(args.graphs) == 1 else ["G1", "G2", "G3"]
    graphs = [_load(s, lab) for s, lab in zip(args.graphs, labels)]
    inputs = _inputs(zip(labels, args.graphs, graphs))
    target = graphs[0] if len(graphs) == 1 else cve_join(*graphs).graph
    numeric = distance_spectrum(target)
    tol = SPECTRUM_TOL if args.tol is None else args.tol
    if args.closed_form:
        closed = closed_form_d_spectrum(*graphs)
        q = quotient_matrix(cve_join(*graphs).params)
        dev = max_deviation(closed, numeric)
        doc = report.spectrum_report(inputs, numeric, closed, q, dev, tol)
    else:
        closed = None
        doc = report.spectrum_report(inputs, numeric)
    _emit(args, report.render_spectrum(doc), doc)
    if args.plot:
        from .plotting import plot_spectrum
        plot_spectrum(args.plot, numeric, closed)
    if closed is not None and not doc["checks"][0]["passed"]:
        return EXIT_FAIL
    return EXIT_OK


def cmd_indices(args) -> int:
    graphs = [_load(s, f"G{i}") for i, s in enumerate(args.graphs, start=1)]
    tol = INDEX_TOL if args.tol is None else args.tol
    v = verify_indices(*graphs, tol=tol)
    doc = report.indices_report(_inputs(zip(("G1", "G2", "G3"), args.graphs, graphs)), v)
    _emit(args, report.render_indices(doc), doc)
    return EXIT_OK if v.passed else EXIT_FAIL


def cmd_equienergetic(args) -> int:
    h1, h2 = _load(args.h1, "H1"), _load(args.h2, "H2")
    family = cycle_union_family(h1, h2, args.a)
    tol = SPECTRUM_TOL * family[0].graph.n if args.tol is None else args.tol
    cert = certify_family(family, tol=tol, spectrum_tol=args.spectrum_tol)
    spectra = [distance_spectrum(g.graph) for g in family]
    doc = report.equienergetic_report(_inputs((("H1", args.h1, h1), ("H2", args.h2, h2))), cert, spectra)
    _emit(args, report.render_equienergetic(doc), doc)
    if args.plot:
        from .plotting import plot_family
        plot_family(args.plot, cert, spectra)
    return EXIT_OK if cert.passed else EXIT_FAIL


def _mutation(text: str):
    name, _, index = text.rpartition(":")
    if name not in formulas.FORMULAS or not index.isdigit() or int(index) >= len(formulas.FORMULAS[name]):
        raise InputError(f"--mutate expects TABLE:INDEX naming an existing coefficient, got {text!r}")
    return name, int(index)


def cmd_verify_all(args) -> int:
    if args.mutate:
        name, index = _mutation(args.mutate)
        with formulas.perturbed(name, index, args.mutate_delta):
            results = run_suite()
    else:
        results = run_suite()
    doc = report.verify_report(results)
    _emit(args, report.render_verify(results, args.max_failures), doc)
    return EXIT_OK if doc["passed"] else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cvejoin", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def outputs(p, plot=False):
        p.add_argument("--json", action="store_true", help="machine-readable report")
        p.add_argument("--out", help="write the report here instead of stdout")
        if plot:
            p.add_argument("--plot", metavar="PNG", help="also render a figure to this file")

    p = sub.add_parser("construct", help="write the CVE-join of three graphs as an edge list")
    p.add_argument("graphs", nargs=3, metavar="G")
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("spectrum", help="distance spectrum and energy")
    p.add_argument("graphs", nargs="+", metavar="G", help="one graph, or G1 G2 G3 for their CVE-join")
    p.add_argument("--closed-form", action="store_true", help="compare with the closed-form spectrum")
    p.add_argument("--tol", type=float, help=f"spectrum comparison tolerance (default {SPECTRUM_TOL:g})")
    outputs(p, plot=True)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("indices", help="topological indices, definitional vs closed form")
    p.add_argument("graphs", nargs=3, metavar="G")
    p.add_argument("--tol", type=float, help=f"tolerance for GA4/ABC5 (default {INDEX_TOL:g})")
    outputs(p)
    p.set_defaults(func=cmd_indices)

    p = sub.add_parser("equienergetic", help="certify a cycle-union D-equienergetic family")
    p.add_argument("h1")
    p.add_argument("h2")
    p.add_argument("a", type=int)
    p.add_argument("--tol", type=float, help="energy spread tolerance (default 1e-8 * order)")
    p.add_argument("--spectrum-tol", type=float, default=1e-6,
                   help="spectra closer than this count as cospectral (default 1e-6)")
    outputs(p, plot=True)
    p.set_defaults(func=cmd_equienergetic)

    p = sub.add_parser("verify-all", help="run the built-in verification suite")
    p.add_argument("--max-failures", type=int, default=10)
    p.add_argument("--mutate", metavar="TABLE:INDEX",
                   help="negative control: perturb one closed-form coefficient first")
    p.add_argument("--mutate-delta", type=int, default=1)
    outputs(p)
    p.set_defaults(func=cmd_verify_all)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, CveError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
