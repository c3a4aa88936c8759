from hypothesis import given, settings
from hypothesis import strategies as st

from mintrails.dag import build_dag
from mintrails.errors import NotActivated
from mintrails.fixtures import converging_c2, diamond_with_chord, seven_node
from mintrails.formats import parse_trail
from mintrails.order import (
    OrderResult,
    TrailKey,
    compare,
    minimal_by_dominance,
    minimal_trails,
    scored_trails,
    trail_key,
)
from mintrails.trails import Trail, decompose, trails_xyz

import pytest

from oracles import activated_brute, converging_nodes, trails_brute
from strategies import dag_queries

keys = st.builds(TrailKey, *[st.integers(0, 3)] * 4)


def test_key_examples():
    d = converging_c2()
    z = [d.index(s) for s in ("c1", "d1", "c3")]
    t = parse_trail("x -> c1 <- t1 -> c2 <- t2 -> c3 <- y", d)
    assert trail_key(d, t, z) == (1, 3, 0, 2)
    d = seven_node()
    t = parse_trail("v1 -> v2 -> v5 <- v3 -> v6", d)
    assert trail_key(d, t, [d.index("v5")]) == (0, 1, 0, 2)
    assert trail_key(d, Trail.from_nodes(d, [0, 1]), []) == (0, 0, 0, 0)


def test_key_of_blocked_trail_raises():
    d = seven_node()
    with pytest.raises(NotActivated):
        trail_key(d, parse_trail("v2 -> v5 <- v3", d), [])


def test_compare_is_lexicographic():
    assert compare(TrailKey(0, 2, 9, 9), TrailKey(1, 0, 0, 0)) is OrderResult.LESS
    assert compare(TrailKey(0, 1, 0, 3), TrailKey(0, 1, 0, 2)) is OrderResult.GREATER
    assert compare(TrailKey(0, 0, 0, 1), TrailKey(0, 0, 0, 1)) is OrderResult.INCOMPARABLE


@given(keys, keys, keys)
def test_order_is_strict_partial(a, b, c):
    assert compare(a, a) is OrderResult.INCOMPARABLE
    if compare(a, b) is OrderResult.LESS:
        assert compare(b, a) is OrderResult.GREATER
        if compare(b, c) is OrderResult.LESS:
            assert compare(a, c) is OrderResult.LESS


@given(st.lists(keys, max_size=8))
def test_dominance_minimal_elements_are_the_least_keys(ks):
    got = minimal_by_dominance(ks)
    if ks:
        assert got == [i for i, k in enumerate(ks) if k == min(ks)]
    else:
        assert got == []


def test_seven_node_minimal_trail():
    d = seven_node()
    res = minimal_trails(d, [d.index("v1")], [d.index("v6")], [d.index("v5")])
    assert [t.render(d) for t in res.trails] == ["v1 -> v2 -> v5 <- v3 -> v6"]
    dec = res.decompositions[0]
    assert dec.C == 1 and dec.witnesses[0].in_z
    assert res.key == (0, 1, 0, 2)


def test_diamond_minimal_pair():
    d = diamond_with_chord()
    res = minimal_trails(d, [0], [3], [])
    assert {t.render(d) for t in res.trails} == {"1 -> 2 -> 4", "1 -> 3 -> 4"}
    a, b = (trail_key(d, t, []) for t in res.trails)
    assert compare(a, b) is OrderResult.INCOMPARABLE
    long = trail_key(d, parse_trail("1 -> 2 -> 3 -> 4", d), [])
    assert compare(a, long) is OrderResult.LESS


def test_separated_query_has_no_minimizers():
    d = seven_node()
    res = minimal_trails(d, [d.index("v2")], [d.index("v6")], [])
    assert not res and res.key is None and res.trails == ()


def _key_by_hand(d, nodes, z):
    """Key straight from the definitions, via path enumeration."""
    from oracles import directed_paths

    conv = converging_nodes(d, nodes)
    zs = set(z)
    desc = 0
    for c in conv:
        if c in zs:
            continue
        paths = [p for t in zs for p in directed_paths(d, c, t) if not set(p[1:-1]) & zs]
        desc += min(len(p) for p in paths) - 2
    return (sum(c not in zs for c in conv), len(conv), desc, len(nodes) - 2 - len(conv))


@settings(max_examples=300)
@given(dag_queries(max_n=6))
def test_scored_keys_match_definitions(q):
    d, x, y, z = q
    scored = scored_trails(d, [x], [y], z)
    assert {t.nodes for _, t in scored} == {
        n for n in trails_brute(d, x, y) if activated_brute(d, n, z)
    }
    for k, t in scored:
        assert k == _key_by_hand(d, t.nodes, z)
        assert k == trail_key(d, t, z)


@settings(max_examples=300)
@given(dag_queries(max_n=6))
def test_minimal_set_matches_pairwise_dominance(q):
    d, x, y, z = q
    ts = trails_xyz(d, [x], [y], z)
    ks = [trail_key(d, t, z) for t in ts]
    res = minimal_trails(d, [x], [y], z)
    assert set(res.trails) == {ts[i] for i in minimal_by_dominance(ks)}
    for dec in res.decompositions:
        assert dec == decompose(d, dec.trail, z)


def test_multi_node_query():
    d = build_dag(4, [(0, 2), (1, 2), (2, 3)])
    res = minimal_trails(d, [0, 1], [3], [])
    assert {t.nodes for t in res.trails} == {(0, 2, 3), (1, 2, 3)}
