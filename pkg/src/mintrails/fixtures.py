"""Small named graphs used throughout the tests, scripts and docs."""
from __future__ import annotations

from .dag import Dag, build_dag


def from_edges(names, edges) -> Dag:
    index = {s: i for i, s in enumerate(names)}
    return build_dag(len(names), [(index[a], index[b]) for a, b in edges], names)


def seven_node() -> Dag:
    """Seven-node DAG whose skeleton has an undirected cycle but no active cycle."""
    names = [f"v{i}" for i in range(1, 8)]
    edges = [
        ("v1", "v4"), ("v1", "v2"), ("v1", "v7"),
        ("v2", "v4"), ("v2", "v5"), ("v2", "v7"),
        ("v3", "v5"), ("v3", "v6"), ("v6", "v7"),
    ]
    return from_edges(names, edges)


def five_node_active_cycle() -> Dag:
    """Contains the active cycle v5 <- v2 <- v1 -> v4 -> v5."""
    names = [f"v{i}" for i in range(1, 6)]
    edges = [
        ("v1", "v2"), ("v1", "v3"), ("v1", "v4"), ("v2", "v3"),
        ("v3", "v4"), ("v2", "v5"), ("v3", "v5"), ("v4", "v5"),
    ]
    return from_edges(names, edges)


def diamond_with_chord() -> Dag:
    """Diamond 1 -> {2, 3} -> 4 plus the arc 2 -> 3."""
    names = ["1", "2", "3", "4"]
    edges = [("1", "2"), ("2", "4"), ("1", "3"), ("3", "4"), ("2", "3")]
    return from_edges(names, edges)


def connected_not_local() -> Dag:
    """1 -> 2 -> 3 -> 4 and 1 -> 5 -> 4: K = {1, 2, 3, 4} is connected but not local."""
    names = ["1", "2", "3", "4", "5"]
    edges = [("1", "2"), ("2", "3"), ("3", "4"), ("1", "5"), ("5", "4")]
    return from_edges(names, edges)


def converging_c2() -> Dag:
    """Minimal trail x -> c1 <- t1 -> c2 <- t2 -> c3 <- y given Z = {c1, d1, c3},
    where the middle converging node c2 stays outside Z."""
    names = ["x", "c1", "t1", "c2", "c3", "t2", "d1", "y"]
    edges = [
        ("x", "c1"), ("c1", "c2"), ("c3", "c2"), ("y", "c3"),
        ("t1", "c1"), ("t1", "c2"), ("t2", "c2"), ("t2", "c3"),
        ("c1", "d1"), ("c2", "d1"), ("c3", "d1"),
    ]
    return from_edges(names, edges)


NAMED = {
    "seven-node": seven_node,
    "active-cycle": five_node_active_cycle,
    "diamond": diamond_with_chord,
    "not-local": connected_not_local,
    "converging-chain": converging_c2,
}
