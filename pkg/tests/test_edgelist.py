import pytest
from hypothesis import given, settings

from cvejoin.edgelist import builtin_graph, format_edge_list, parse_edge_list, read_graph, write_graph
from cvejoin.errors import ParseError
from cvejoin.graph import complete, complete_bipartite, cycle, petersen

from conftest import graphs


@pytest.mark.parametrize("name, expected", [
    ("petersen", petersen()),
    ("k33", complete_bipartite(3, 3)),
    ("K33", complete_bipartite(3, 3)),
    ("c4", cycle(4)),
    ("k2", complete(2)),
    ("k3", complete(3)),
    ("k2,5", complete_bipartite(2, 5)),
])
def test_builtins(name, expected):
    assert builtin_graph(name) == expected
    assert read_graph("builtin:" + name) == expected


def test_unknown_builtin():
    with pytest.raises(ParseError, match="unknown"):
        builtin_graph("dodecahedron")


def test_parse_with_comments():
    text = "# triangle\n\n3 3\n0 1\n# mid\n1 2\n2 0\n"
    assert parse_edge_list(text) == complete(3)


@pytest.mark.parametrize("text, line, fragment", [
    ("2 1\n0 0\n", 2, "self-loop"),
    ("3 2\n0 1\n1 0\n", 3, "duplicate"),
    ("3 1\n0 3\n", 2, "outside"),
    ("3 1\n0 x\n", 2, "two integers"),
    ("3 1\n0 1 2\n", 2, "two integers"),
    ("3 1\n0 1\n1 2\n", 3, "more edge lines"),
    ("3 2\n0 1\n", None, "declared m = 2"),
    ("-1 0\n", 1, "negative"),
    ("# nothing\n", None, "header"),
])
def test_parse_errors(text, line, fragment):
    with pytest.raises(ParseError, match=fragment) as info:
        parse_edge_list(text, path="g.txt")
    assert info.value.line == line
    assert str(info.value).startswith("g.txt:")
    if line is not None:
        assert f"line {line}" in str(info.value)


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        read_graph(str(tmp_path / "absent.txt"))


def test_format():
    assert format_edge_list(complete(2)) == "# edge list, 0-based vertex labels\n2 1\n0 1\n"


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=0, max_n=9))
def test_round_trip(g):
    assert parse_edge_list(format_edge_list(g, ["x"])) == g


def test_round_trip_file(tmp_path):
    path = tmp_path / "p.txt"
    write_graph(petersen(), path)
    assert read_graph(str(path)) == petersen()
