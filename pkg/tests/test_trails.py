import pytest
from hypothesis import given, settings

from mintrails.dag import build_dag
from mintrails.errors import InvalidQuery, NoDescendantInZ, NotActivated
from mintrails.fixtures import converging_c2, diamond_with_chord, seven_node
from mintrails.formats import parse_trail
from mintrails.trails import (
    BACKWARD,
    FORWARD,
    ConnectionKind,
    Trail,
    all_trails,
    blocking_node,
    chords,
    closest_descendant,
    common_ancestor,
    connection_at,
    d_separated,
    decompose,
    enumerate_trails,
    is_activated,
    shortest_constrained_trail,
    trails_xyz,
)

from oracles import activated_brute, converging_nodes, directed_paths, dsep_moral, trails_brute
from strategies import dag_queries, dags


def ids(d, *names):
    return [d.index(s) for s in names]


# ---------------------------------------------------------------- trails


def test_trail_validation():
    with pytest.raises(ValueError):
        Trail((0, 1, 0), (FORWARD, BACKWARD))
    with pytest.raises(ValueError):
        Trail((0, 1), ())


def test_from_nodes_reads_directions():
    d = seven_node()
    t = Trail.from_nodes(d, ids(d, "v1", "v2", "v5", "v3", "v6"))
    assert t.dirs == (FORWARD, FORWARD, BACKWARD, FORWARD)
    assert t.render(d) == "v1 -> v2 -> v5 <- v3 -> v6"
    with pytest.raises(ValueError):
        Trail.from_nodes(d, ids(d, "v1", "v3"))


def test_connection_kinds():
    d = seven_node()
    t = Trail.from_nodes(d, ids(d, "v1", "v2", "v5", "v3", "v6"))
    assert connection_at(t, 1) is ConnectionKind.SERIAL
    assert connection_at(t, 2) is ConnectionKind.CONVERGING
    assert connection_at(t, 3) is ConnectionKind.DIVERGING
    assert t.converging == (d.index("v5"),)


def test_diamond_has_four_trails():
    d = diamond_with_chord()
    got = {t.render(d) for t in all_trails(d, 0, 3)}
    assert got == {"1 -> 2 -> 4", "1 -> 3 -> 4", "1 -> 2 -> 3 -> 4", "1 -> 3 <- 2 -> 4"}


@given(dags(min_n=2, max_n=6))
def test_enumeration_matches_permutation_oracle(d):
    for x in range(d.n):
        for y in range(d.n):
            if x != y:
                got = [t.nodes for t in enumerate_trails(d, x, y)]
                assert len(got) == len(set(got))
                assert set(got) == set(trails_brute(d, x, y))


@given(dags(min_n=2, max_n=6))
def test_reversal_is_an_involution(d):
    for t in all_trails(d, 0, d.n - 1):
        r = t.reversed()
        assert r.reversed() == t
        assert r.converging == tuple(reversed(t.converging))


# ---------------------------------------------------------------- activation


def test_seven_node_separation_examples():
    d = seven_node()
    v2, v5, v6 = ids(d, "v2", "v5", "v6")
    for method in ("reachability", "enumeration"):
        assert d_separated(d, [v2], [v6], [], method=method)
        assert not d_separated(d, [v2], [v6], [v5], method=method)


def test_invalid_queries():
    d = seven_node()
    with pytest.raises(InvalidQuery):
        d_separated(d, [0], [0], [])
    with pytest.raises(InvalidQuery):
        d_separated(d, [], [1], [])
    with pytest.raises(InvalidQuery):
        d_separated(d, [0], [1], [1])
    with pytest.raises(ValueError):
        d_separated(d, [0], [1], [], method="magic")


def test_blocking_node_reasons():
    d = seven_node()
    t = Trail.from_nodes(d, ids(d, "v2", "v5", "v3", "v6"))
    pos, why = blocking_node(d, t, [])
    assert t.nodes[pos] == d.index("v5") and "converging" in why
    t = Trail.from_nodes(d, ids(d, "v1", "v2", "v5"))
    pos, why = blocking_node(d, t, ids(d, "v2"))
    assert t.nodes[pos] == d.index("v2") and "non-converging" in why
    assert blocking_node(d, t, []) is None


@settings(max_examples=300)
@given(dag_queries(max_n=6))
def test_activation_matches_oracle(q):
    d, x, y, z = q
    for t in all_trails(d, x, y):
        assert is_activated(d, t, z) == activated_brute(d, t.nodes, z)


@settings(max_examples=300)
@given(dag_queries(max_n=7))
def test_both_dsep_methods_match_moral_graph_criterion(q):
    d, x, y, z = q
    expect = dsep_moral(d, {x}, {y}, set(z))
    assert d_separated(d, [x], [y], z, method="reachability") == expect
    assert d_separated(d, [x], [y], z, method="enumeration") == expect


@settings(max_examples=100)
@given(dags(min_n=3, max_n=7))
def test_set_valued_dsep_matches_moral_graph(d):
    X, Y, Z = {0}, {d.n - 1, 1}, set(range(2, d.n - 1)) - {1}
    if X & Y:
        return
    assert d_separated(d, X, Y, Z) == dsep_moral(d, X, Y, Z)


@given(dag_queries(max_n=6))
def test_trails_xyz_are_the_activated_trails(q):
    d, x, y, z = q
    got = trails_xyz(d, [x], [y], z)
    assert {t.nodes for t in got} == {
        n for n in trails_brute(d, x, y) if activated_brute(d, n, z)
    }
    assert (not got) == d_separated(d, [x], [y], z)


# ---------------------------------------------------------------- closest descendant


def test_closest_descendant_examples():
    d = converging_c2()
    c1, c2, d1, c3 = ids(d, "c1", "c2", "d1", "c3")
    w = closest_descendant(d, c2, [c1, d1, c3])
    assert not w.in_z and w.target == d1 and w.path.interior == () and w.length == 0
    assert closest_descendant(d, c1, [c1, d1]).in_z
    chain = build_dag(3, [(0, 1), (1, 2)])
    w = closest_descendant(chain, 0, [2])
    assert w.path.nodes == (0, 1, 2) and w.length == 1
    with pytest.raises(NoDescendantInZ):
        closest_descendant(chain, 2, [0])


@given(dag_queries(max_n=6))
def test_closest_descendant_matches_path_oracle(q):
    d, x, _, z = q
    zs = set(z)
    if not zs or x in zs:
        return
    paths = [
        p for t in zs for p in directed_paths(d, x, t) if not (set(p[1:-1]) & zs)
    ]
    if not paths:
        with pytest.raises(NoDescendantInZ):
            closest_descendant(d, x, z)
        return
    best = min(paths, key=lambda p: (len(p), p))
    assert closest_descendant(d, x, z).path.nodes == best


# ---------------------------------------------------------------- decomposition


def test_decomposition_of_three_converging_trail():
    d = converging_c2()
    z = ids(d, "c1", "d1", "c3")
    t = parse_trail("x -> c1 <- t1 -> c2 <- t2 -> c3 <- y", d)
    dec = decompose(d, t, z)
    assert dec.C == 3
    assert [w.in_z for w in dec.witnesses] == [True, False, True]
    assert dec.subtrail_lengths == (0, 1, 1, 0)
    assert dec.join() == t


def test_decompose_rejects_blocked_trail():
    d = seven_node()
    t = Trail.from_nodes(d, ids(d, "v2", "v5", "v3", "v6"))
    with pytest.raises(NotActivated):
        decompose(d, t, [])


@given(dag_queries(max_n=6))
def test_decomposition_reassembles(q):
    d, x, y, z = q
    for t in trails_xyz(d, [x], [y], z):
        dec = decompose(d, t, z)
        assert dec.join() == t
        assert len(dec.subtrails) == dec.C + 1
        assert list(dec.converging) == converging_nodes(d, t.nodes)
        for s in dec.subtrails:
            assert not s.converging_positions


# ---------------------------------------------------------------- chords etc.


def test_chords_and_common_ancestor():
    d = diamond_with_chord()
    t = Trail.from_nodes(d, [0, 1, 2, 3])
    assert chords(d, t) == [(0, 2), (1, 3)]
    assert common_ancestor(t) == 0
    t = Trail.from_nodes(d, [1, 0, 2])
    assert common_ancestor(t) == 1
    t = Trail.from_nodes(d, [3, 2, 0])
    assert common_ancestor(t) == 2


def test_shortest_constrained_trail():
    d = diamond_with_chord()
    got = shortest_constrained_trail(d, 0, 3)
    assert {t.render(d) for t in got} == {"1 -> 2 -> 4", "1 -> 3 -> 4"}
    got = shortest_constrained_trail(d, 0, 3, allowed_interior=[1, 2])
    assert {t.render(d) for t in got} == {"1 -> 2 -> 4", "1 -> 3 -> 4"}
    got = shortest_constrained_trail(d, 0, 3, allowed_interior=[2])
    assert [t.render(d) for t in got] == ["1 -> 3 -> 4"]
    assert shortest_constrained_trail(d, 0, 3, first_dir=BACKWARD) == []


@given(dags(min_n=2, max_n=6))
def test_shortest_constrained_matches_filtered_enumeration(d):
    a, b = 0, d.n - 1
    allowed = set(range(1, d.n, 2))
    for first in (None, FORWARD, BACKWARD):
        for last in (None, FORWARD):
            ok = [
                t for t in all_trails(d, a, b)
                if not t.converging_positions
                and set(t.interior) <= allowed
                and (first is None or t.dirs[0] is first)
                and (last is None or t.dirs[-1] is last)
            ]
            got = shortest_constrained_trail(
                d, a, b, allowed_interior=allowed, first_dir=first, last_dir=last
            )
            if not ok:
                assert got == []
                continue
            m = min(len(t.nodes) for t in ok)
            assert set(got) == {t for t in ok if len(t.nodes) == m}
