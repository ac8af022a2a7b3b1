"""Plain-text edge-list files and built-in named graphs.

Format::

    # comment lines start with '#', blank lines are ignored
    n m
    u v        (m lines, 0-based endpoints)
"""

from __future__ import annotations

import re
from pathlib import Path

from .errors import GraphError, ParseError
from .graph import Graph, complete, complete_bipartite, cycle, new_graph, petersen

BUILTIN_PREFIX = "builtin:"

_NAMED = {
    "petersen": petersen,
    "k33": lambda: complete_bipartite(3, 3),
}


def builtin_graph(name: str) -> Graph:
    """Named graphs: ``petersen``, ``k33``, ``c<n>``, ``k<n>``, ``k<p>,<q>``."""
    key = name.strip().lower()
    if key in _NAMED:
        return _NAMED[key]()
    if m := re.fullmatch(r"c(\d+)", key):
        return cycle(int(m[1]))
    if m := re.fullmatch(r"k(\d+),(\d+)", key):
        return complete_bipartite(int(m[1]), int(m[2]))
    if m := re.fullmatch(r"k(\d+)", key):
        return complete(int(m[1]))
    raise ParseError(f"unknown built-in graph {name!r}")


def parse_edge_list(text: str, path=None) -> Graph:
    header = None
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"expected two integers, got {line!r}", lineno, path)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"expected two integers, got {line!r}", lineno, path) from None
        if header is None:
            if a < 0 or b < 0:
                raise ParseError(f"negative count in header {line!r}", lineno, path)
            header = (a, b)
            continue
        if len(pairs) == header[1]:
            raise ParseError(f"more edge lines than the declared m = {header[1]}", lineno, path)
        if a == b:
            raise ParseError(f"self-loop {line!r}", lineno, path)
        pairs.append(((a, b), lineno))
    if header is None:
        raise ParseError("missing 'n m' header", None, path)
    if len(pairs) != header[1]:
        raise ParseError(f"declared m = {header[1]} but found {len(pairs)} edge lines", None, path)
    seen = {}
    for (a, b), lineno in pairs:
        if not (0 <= a < header[0] and 0 <= b < header[0]):
            raise ParseError(f"endpoint outside 0..{header[0] - 1} in '{a} {b}'", lineno, path)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ParseError(f"duplicate edge {key} (first on line {seen[key]})", lineno, path)
        seen[key] = lineno
    try:
        return new_graph(header[0], [p for p, _ in pairs])
    except GraphError as exc:  # pragma: no cover - the checks above cover every case
        raise ParseError(str(exc), None, path) from exc


def format_edge_list(g: Graph, comments=()) -> str:
    lines = ["# edge list, 0-based vertex labels"]
    lines += [f"# {c}" for c in comments]
    lines.append(f"{g.n} {g.m}")
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def read_graph(source: str) -> Graph:
    """Load ``builtin:<name>`` or an edge-list file path."""
    if source.startswith(BUILTIN_PREFIX):
        return builtin_graph(source[len(BUILTIN_PREFIX):])
    path = Path(source)
    return parse_edge_list(path.read_text(), path=str(path))


def write_graph(g: Graph, path, comments=()) -> None:
    Path(path).write_text(format_edge_list(g, comments))
