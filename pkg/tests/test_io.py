from fractions import Fraction

import pytest
from hypothesis import given

from bredux.errors import (
    DuplicateEdgeError,
    MalformedEdgeError,
    MalformedHeaderError,
    SelfLoopError,
    VertexRangeError,
)
from bredux.graph import Graph, WeightedGraph, complete_graph, empty_graph, enumerate_graphs
from bredux.io import parse_any, parse_graph, parse_weighted_graph, serialize, serialize_graph, to_dot

from strategies import graphs


def test_parse_k3():
    assert parse_graph("3 3\n0 1\n1 2\n0 2") == complete_graph(3)


def test_serialize_empty():
    assert serialize_graph(empty_graph(2)) == "2 0"


@pytest.mark.parametrize(
    "text,exc,line",
    [
        ("2 1\n0 0", SelfLoopError, 2),
        ("3 2\n0 1\n1 0", DuplicateEdgeError, 3),
        ("2 1\n0 2", VertexRangeError, 2),
        ("x 1\n0 1", MalformedHeaderError, 1),
        ("3", MalformedHeaderError, 1),
        ("3 2\n0 1", MalformedHeaderError, 1),
        ("3 1\n0 1 2", MalformedEdgeError, 2),
        ("3 1\n0 a", MalformedEdgeError, 2),
        ("", MalformedHeaderError, 1),
    ],
)
def test_parse_errors_name_the_line(text, exc, line):
    with pytest.raises(exc) as info:
        parse_graph(text)
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


def test_comments_and_blank_lines_are_skipped():
    text = "# triangle\n3 3\n\n0 1\n1 2 \n0 2\n"
    assert parse_graph(text) == complete_graph(3)


def test_roundtrip_all_small_graphs():
    for n in range(1, 6):
        for g in enumerate_graphs(n):
            assert parse_graph(serialize_graph(g)) == g


@given(graphs(max_n=9))
def test_roundtrip_property(g):
    assert parse_graph(serialize_graph(g)) == g


def test_weighted_roundtrip_with_ratio():
    w = WeightedGraph(3, {(0, 1): 0, (0, 2): Fraction(1, 2), (1, 2): 3})
    text = serialize(w)
    assert text == "3 3 w\n0 1 0\n0 2 1/2\n1 2 3"
    assert parse_weighted_graph(text) == w
    assert parse_any(text) == w


def test_weighted_must_be_complete():
    with pytest.raises(MalformedHeaderError):
        parse_weighted_graph("3 2 w\n0 1 0\n1 2 0")


def test_weighted_bad_weight():
    with pytest.raises(MalformedEdgeError, match="line 2"):
        parse_weighted_graph("2 1 w\n0 1 x")


def test_dot_export():
    dot = to_dot(Graph(2, [(0, 1)]))
    assert dot.splitlines() == ["graph G {", "  0;", "  1;", "  0 -- 1;", "}"]
    wdot = to_dot(WeightedGraph(2, {(0, 1): 1}))
    assert '0 -- 1 [label="1"];' in wdot
