"""Immutable DAG over dense integer node ids.

Node sets are passed around publicly as iterables / frozensets of ints.
Internally every per-node relation is also stored as an int bitmask, which
is what the hot loops in :mod:`mintrails.trails` and :mod:`mintrails.verify`
work with.
"""
from __future__ import annotations

import heapq
from typing import Iterable, Iterator, Sequence

from .errors import (
    AntiparallelArcs,
    CycleDetected,
    DuplicateArc,
    DuplicateLabel,
    GraphError,
    NodeOutOfRange,
    SelfLoop,
)


def mask_of(nodes: Iterable[int]) -> int:
    m = 0
    for v in nodes:
        m |= 1 << v
    return m


def nodes_of(mask: int) -> Iterator[int]:
    """Members of a bitmask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Dag:
    """A validated DAG. Build instances with :func:`build_dag`."""

    __slots__ = ("n", "arcs", "labels", "pa", "ch", "adj", "de", "an", "nbrs", "_cache")

    def __init__(self, n, arcs, labels, pa, ch):
        self.n = n
        self.arcs = arcs  # sorted tuple of (u, v)
        self.labels = labels  # tuple of str, or None
        self.pa = pa
        self.ch = ch
        self.adj = tuple(p | c for p, c in zip(pa, ch))
        self.nbrs = tuple(tuple(nodes_of(a)) for a in self.adj)
        order = _topo(n, pa, ch)
        self.de = _closure(ch, order[::-1])
        self.an = _closure(pa, order)
        self._cache = {}

    def __repr__(self):
        return f"Dag(n={self.n}, arcs={list(self.arcs)!r})"

    def __eq__(self, other):
        if not isinstance(other, Dag):
            return NotImplemented
        return (self.n, self.arcs, self.labels) == (other.n, other.arcs, other.labels)

    def __hash__(self):
        return hash((self.n, self.arcs, self.labels))

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self.ch[u] >> v & 1)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def name(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def names(self) -> list[str]:
        return [self.name(v) for v in range(self.n)]

    def index(self, label: str) -> int:
        """Node id for a label; plain integers are accepted for unlabelled graphs."""
        lookup = self._cache.get("index")
        if lookup is None:
            lookup = {self.name(v): v for v in range(self.n)}
            self._cache["index"] = lookup
        try:
            return lookup[label]
        except KeyError:
            raise KeyError(f"unknown node label {label!r}") from None

    @property
    def all_mask(self) -> int:
        return (1 << self.n) - 1


def _topo(n, pa, ch):
    """Kahn's procedure, smallest available index first. Returns [] on a cycle."""
    indeg = [bin(p).count("1") for p in pa]
    heap = [v for v in range(n) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for c in nodes_of(ch[v]):
            indeg[c] -= 1
            if indeg[c] == 0:
                heapq.heappush(heap, c)
    return order if len(order) == n else []


def _closure(step, order):
    # `order` must list every node after all nodes reachable from it via `step`
    out = [0] * len(step)
    for v in order:
        m = 0
        for u in nodes_of(step[v]):
            m |= (1 << u) | out[u]
        out[v] = m
    return tuple(out)


def _find_cycle(n, ch):
    color = [0] * n
    for root in range(n):
        if color[root]:
            continue
        stack = [(root, iter(nodes_of(ch[root])))]
        path = [root]
        color[root] = 1
        while stack:
            v, it = stack[-1]
            for c in it:
                if color[c] == 1:
                    return path[path.index(c):] + [c]
                if color[c] == 0:
                    color[c] = 1
                    path.append(c)
                    stack.append((c, iter(nodes_of(ch[c]))))
                    break
            else:
                color[v] = 2
                path.pop()
                stack.pop()
    return None


def build_dag(n: int, arcs: Iterable[Sequence[int]], labels: Sequence[str] | None = None) -> Dag:
    """Validate ``arcs`` over nodes ``0..n-1`` and return a :class:`Dag`.

    Duplicate and antiparallel arcs are errors rather than being merged.
    """
    if n < 0:
        raise GraphError(f"node count must be nonnegative, got {n}")
    if labels is not None:
        labels = tuple(str(s) for s in labels)
        if len(labels) != n:
            raise GraphError(f"expected {n} labels, got {len(labels)}")

    def nm(v):
        return labels[v] if labels is not None and 0 <= v < n else str(v)

    pa = [0] * n
    ch = [0] * n
    seen = set()
    for arc in arcs:
        u, v = arc
        for w in (u, v):
            if not (isinstance(w, int) and 0 <= w < n):
                raise NodeOutOfRange(f"node {w!r} outside [0, {n})")
        if u == v:
            raise SelfLoop(f"self-loop at {nm(u)}")
        if (u, v) in seen:
            raise DuplicateArc(f"duplicate arc {nm(u)} -> {nm(v)}")
        if (v, u) in seen:
            raise AntiparallelArcs(f"antiparallel arcs between {nm(u)} and {nm(v)}")
        seen.add((u, v))
        ch[u] |= 1 << v
        pa[v] |= 1 << u

    if labels is not None and len(set(labels)) != n:
        dup = next(s for s in labels if labels.count(s) > 1)
        raise DuplicateLabel(f"duplicate label {dup!r}")

    if not _topo(n, pa, ch):
        if n:
            cyc = _find_cycle(n, ch)
            raise CycleDetected(cyc, "directed cycle: " + " -> ".join(nm(v) for v in cyc))

    return Dag(n, tuple(sorted(seen)), labels, tuple(pa), tuple(ch))


def parents(d: Dag, v: int) -> frozenset[int]:
    return frozenset(nodes_of(d.pa[v]))


def children(d: Dag, v: int) -> frozenset[int]:
    return frozenset(nodes_of(d.ch[v]))


def ancestors(d: Dag, v: int) -> frozenset[int]:
    """Strict ancestors: ``v`` itself is never included."""
    return frozenset(nodes_of(d.an[v]))


def descendants(d: Dag, v: int) -> frozenset[int]:
    """Strict descendants: ``v`` itself is never included."""
    return frozenset(nodes_of(d.de[v]))


def topological_order(d: Dag) -> list[int]:
    """Parents before children; ties go to the smallest index."""
    return _topo(d.n, d.pa, d.ch)


def induced_subgraph(d: Dag, keep: Iterable[int]) -> tuple[Dag, dict[int, int]]:
    """Subgraph on ``keep`` with nodes renumbered densely in ascending order.

    Returns the new graph and the ``old -> new`` id mapping.
    """
    kept = sorted(set(keep))
    for v in kept:
        if not 0 <= v < d.n:
            raise NodeOutOfRange(f"node {v!r} outside [0, {d.n})")
    mapping = {old: new for new, old in enumerate(kept)}
    arcs = [(mapping[u], mapping[v]) for u, v in d.arcs if u in mapping and v in mapping]
    labels = [d.labels[v] for v in kept] if d.labels is not None else None
    return build_dag(len(kept), arcs, labels), mapping
