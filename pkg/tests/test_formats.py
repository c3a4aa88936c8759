import json

import pytest
from hypothesis import given

from mintrails.errors import AntiparallelArcs, CycleDetected, ParseError, SelfLoop
from mintrails.fixtures import NAMED, seven_node
from mintrails.formats import (
    dumps_graph,
    graph_from_doc,
    parse_graph,
    parse_node_list,
    parse_trail,
    to_dot,
)
from mintrails.trails import all_trails

from strategies import dags


def test_json_document():
    d = parse_graph(json.dumps({"nodes": ["a", "b"], "edges": [["a", "b"]]}))
    assert d.names() == ["a", "b"] and d.arcs == ((0, 1),)


@pytest.mark.parametrize(
    "doc",
    [
        "[]",
        '{"edges": []}',
        '{"nodes": ["a"], "edges": [["a"]]}',
        '{"nodes": ["a"], "edges": [["a", "zz"]]}',
        '{"nodes": ["a"], "edges": {}}',
    ],
)
def test_bad_json_documents(doc):
    with pytest.raises(ParseError):
        parse_graph(doc, "json")


def test_json_syntax_error_has_position():
    with pytest.raises(ParseError) as info:
        parse_graph('{"nodes": [\n  "a",, ]}', "json")
    assert info.value.line == 2


def test_graph_errors_carry_labels():
    doc = '{"nodes": ["a","b","c"], "edges": [["a","b"],["b","c"],["c","a"]]}'
    with pytest.raises(CycleDetected, match="a -> b -> c -> a"):
        parse_graph(doc)
    with pytest.raises(AntiparallelArcs, match="x"):
        parse_graph('{"nodes": ["x","y"], "edges": [["x","y"],["y","x"]]}')


def test_dot_subset():
    d = parse_graph("digraph g { a -> b; }")
    assert d.n == 2 and d.arcs == ((0, 1),)
    d = parse_graph(
        """strict digraph "example" {
            // comment
            a -> b -> c [color=red];
            d;  /* lone node */
            "e f" -> a
        }"""
    )
    assert d.names() == ["a", "b", "c", "d", "e f"]
    assert set(d.arcs) == {(0, 1), (1, 2), (4, 0)}


def test_dot_self_loop():
    with pytest.raises(SelfLoop):
        parse_graph("digraph g { a -> a; }")


@pytest.mark.parametrize(
    "text, line",
    [
        ("graph g { a -- b; }", 1),
        ("digraph g {\n a -- b; }", 2),
        ("digraph g { node [shape=box]; }", 1),
        ("digraph g { a = b; }", 1),
        ("digraph g { a -> b;", 1),
        ("digraph g { a -> b; } extra", 1),
        ("digraph g {\n\n  a -> $ }", 3),
    ],
)
def test_dot_rejections(text, line):
    with pytest.raises(ParseError) as info:
        parse_graph(text, "dot")
    assert info.value.line == line
    assert f"line {line}" in str(info.value)


@given(dags(max_n=7))
def test_json_round_trip(d):
    back = parse_graph(dumps_graph(d))
    assert back.n == d.n and back.arcs == d.arcs
    assert back.names() == d.names()


@given(dags(max_n=7))
def test_dot_round_trip(d):
    back = parse_graph(to_dot(d), "dot")
    assert back.names() == d.names()
    assert {(back.name(u), back.name(v)) for u, v in back.arcs} == {
        (d.name(u), d.name(v)) for u, v in d.arcs
    }


@pytest.mark.parametrize("name", sorted(NAMED))
def test_fixture_round_trip(name):
    d = NAMED[name]()
    assert graph_from_doc(json.loads(dumps_graph(d))) == d


@given(dags(min_n=2, max_n=6))
def test_trail_rendering_round_trip(d):
    for t in all_trails(d, 0, d.n - 1):
        assert parse_trail(t.render(d), d) == t


def test_parse_trail_checks_arcs():
    d = seven_node()
    with pytest.raises(ParseError):
        parse_trail("v1 <- v2", d)
    with pytest.raises(KeyError):
        parse_trail("v1 -> v99", d)


def test_node_lists():
    d = seven_node()
    assert parse_node_list("", d) == []
    assert parse_node_list("v1, v3", d) == [0, 2]
