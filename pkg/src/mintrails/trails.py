"""Trails in the skeleton of a DAG, activation by a conditioning set, and
decomposition of activated trails into converging nodes and subtrails.

Only simple trails (pairwise distinct nodes) are considered.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

from .dag import Dag, mask_of, nodes_of
from .errors import (
    HasConvergingConnection,
    InvalidQuery,
    NoDescendantInZ,
    NotActivated,
)


class Direction(enum.Enum):
    FORWARD = "->"  # left node is the parent of the right node
    BACKWARD = "<-"

    def flipped(self) -> "Direction":
        return Direction.BACKWARD if self is Direction.FORWARD else Direction.FORWARD


FORWARD = Direction.FORWARD
BACKWARD = Direction.BACKWARD


class ConnectionKind(enum.Enum):
    CONVERGING = "converging"
    SERIAL = "serial"
    DIVERGING = "diverging"


@dataclass(frozen=True)
class Trail:
    """A simple trail. Equality is orientation-sensitive."""

    nodes: tuple[int, ...]
    dirs: tuple[Direction, ...]

    def __post_init__(self):
        if len(self.nodes) < 2:
            raise ValueError("a trail needs at least two nodes")
        if len(self.dirs) != len(self.nodes) - 1:
            raise ValueError("need exactly one direction per step")
        if len(set(self.nodes)) != len(self.nodes):
            raise ValueError(f"trail repeats a node: {self.nodes}")

    @classmethod
    def from_nodes(cls, d: Dag, nodes: Sequence[int]) -> "Trail":
        """Trail through ``nodes``, reading arc directions off ``d``."""
        dirs = []
        for u, v in zip(nodes, nodes[1:]):
            if d.has_arc(u, v):
                dirs.append(FORWARD)
            elif d.has_arc(v, u):
                dirs.append(BACKWARD)
            else:
                raise ValueError(f"{d.name(u)} and {d.name(v)} are not adjacent")
        return cls(tuple(nodes), tuple(dirs))

    @property
    def first(self) -> int:
        return self.nodes[0]

    @property
    def last(self) -> int:
        return self.nodes[-1]

    @property
    def interior(self) -> tuple[int, ...]:
        return self.nodes[1:-1]

    def reversed(self) -> "Trail":
        return Trail(self.nodes[::-1], tuple(s.flipped() for s in reversed(self.dirs)))

    def segment(self, i: int, j: int) -> "Trail":
        """Sub-trail between node positions ``i`` and ``j`` (inclusive, i < j)."""
        return Trail(self.nodes[i : j + 1], self.dirs[i:j])

    @cached_property
    def converging_positions(self) -> tuple[int, ...]:
        return tuple(
            i
            for i in range(1, len(self.nodes) - 1)
            if self.dirs[i - 1] is FORWARD and self.dirs[i] is BACKWARD
        )

    @cached_property
    def converging(self) -> tuple[int, ...]:
        return tuple(self.nodes[i] for i in self.converging_positions)

    @cached_property
    def _nonconverging_mask(self) -> int:
        return mask_of(self.interior) & ~mask_of(self.converging)

    def render(self, d: Optional[Dag] = None) -> str:
        name = d.name if d is not None else str
        parts = [name(self.nodes[0])]
        for step, v in zip(self.dirs, self.nodes[1:]):
            parts += [step.value, name(v)]
        return " ".join(parts)


def connection_at(t: Trail, i: int) -> ConnectionKind:
    if not 1 <= i <= len(t.nodes) - 2:
        raise IndexError(f"position {i} is not interior")
    left, right = t.dirs[i - 1], t.dirs[i]
    if left is FORWARD and right is BACKWARD:
        return ConnectionKind.CONVERGING
    if left is BACKWARD and right is FORWARD:
        return ConnectionKind.DIVERGING
    return ConnectionKind.SERIAL


def _step(d: Dag, u: int, v: int) -> Direction:
    return FORWARD if d.ch[u] >> v & 1 else BACKWARD


def enumerate_trails(d: Dag, x: int, y: int) -> Iterator[Trail]:
    """Every simple trail from ``x`` to ``y``, in lexicographic node order."""
    if x == y:
        raise ValueError("trail endpoints must differ")
    path = [x]
    on_path = 1 << x
    stack = [iter(d.nbrs[x])]
    while stack:
        for u in stack[-1]:
            if on_path >> u & 1:
                continue
            if u == y:
                nodes = path + [y]
                yield Trail(tuple(nodes), tuple(_step(d, a, b) for a, b in zip(nodes, nodes[1:])))
                continue
            path.append(u)
            on_path |= 1 << u
            stack.append(iter(d.nbrs[u]))
            break
        else:
            stack.pop()
            on_path &= ~(1 << path.pop())


def all_trails(d: Dag, x: int, y: int) -> tuple[Trail, ...]:
    """Memoised :func:`enumerate_trails`."""
    key = ("trails", x, y)
    hit = d._cache.get(key)
    if hit is None:
        hit = d._cache[key] = tuple(enumerate_trails(d, x, y))
    return hit


def _activated(d: Dag, t: Trail, zmask: int) -> bool:
    if t._nonconverging_mask & zmask:
        return False
    de = d.de
    for c in t.converging:
        if not ((1 << c | de[c]) & zmask):
            return False
    return True


def is_activated(d: Dag, t: Trail, z: Iterable[int] = ()) -> bool:
    zmask = mask_of(z)
    if (1 << t.first | 1 << t.last) & zmask:
        raise InvalidQuery("trail endpoints must not be in Z")
    return _activated(d, t, zmask)


def blocking_node(d: Dag, t: Trail, z: Iterable[int] = ()) -> Optional[tuple[int, str]]:
    """First interior position that blocks ``t`` given ``z`` and why, or None."""
    zmask = mask_of(z)
    conv = set(t.converging_positions)
    for i in range(1, len(t.nodes) - 1):
        v = t.nodes[i]
        if i in conv:
            if not ((1 << v | d.de[v]) & zmask):
                return i, "converging node with no descendant in Z"
        elif zmask >> v & 1:
            return i, "non-converging node in Z"
    return None


def _check_query(d: Dag, X, Y, Z) -> tuple[int, int, int]:
    xm, ym, zm = mask_of(X), mask_of(Y), mask_of(Z)
    if not xm or not ym:
        raise InvalidQuery("X and Y must be nonempty")
    if xm & ym or xm & zm or ym & zm:
        raise InvalidQuery("X, Y and Z must be pairwise disjoint")
    if (xm | ym | zm) >> d.n:
        raise InvalidQuery("query mentions a node outside the graph")
    return xm, ym, zm


def d_separated_enumeration(d: Dag, X, Y, Z=()) -> bool:
    """d-separation by brute force: enumerate all trails, test each one."""
    xm, ym, zm = _check_query(d, X, Y, Z)
    for x in nodes_of(xm):
        for y in nodes_of(ym):
            for t in all_trails(d, x, y):
                if _activated(d, t, zm):
                    return False
    return True


def reachable(d: Dag, xmask: int, zmask: int) -> int:
    """Nodes reachable from ``xmask`` along trails activated by ``zmask``.

    Search over (node, arrived-from-child?) states; the standard
    Bayes-ball traversal. Returns a bitmask that excludes Z.
    """
    anz = zmask
    for z in nodes_of(zmask):
        anz |= d.an[z]
    seen_up = seen_down = 0
    out = 0
    stack = [(x, True) for x in nodes_of(xmask)]
    while stack:
        v, up = stack.pop()
        bit = 1 << v
        if up:
            if seen_up & bit:
                continue
            seen_up |= bit
        else:
            if seen_down & bit:
                continue
            seen_down |= bit
        in_z = zmask & bit
        if not in_z:
            out |= bit
        if up and not in_z:
            stack.extend((p, True) for p in nodes_of(d.pa[v]))
            stack.extend((c, False) for c in nodes_of(d.ch[v]))
        elif not up:
            if not in_z:
                stack.extend((c, False) for c in nodes_of(d.ch[v]))
            if anz & bit:
                stack.extend((p, True) for p in nodes_of(d.pa[v]))
    return out


def d_separated_reachability(d: Dag, X, Y, Z=()) -> bool:
    xm, ym, zm = _check_query(d, X, Y, Z)
    return not (reachable(d, xm, zm) & ym)


def d_separated(d: Dag, X, Y, Z=(), method: str = "reachability") -> bool:
    if method == "reachability":
        return d_separated_reachability(d, X, Y, Z)
    if method == "enumeration":
        return d_separated_enumeration(d, X, Y, Z)
    raise ValueError(f"unknown method {method!r}")


def trails_xyz(d: Dag, X, Y, Z=()) -> list[Trail]:
    """All trails from X to Y activated by Z, lexicographically ordered."""
    xm, ym, zm = _check_query(d, X, Y, Z)
    out = [
        t
        for x in nodes_of(xm)
        for y in nodes_of(ym)
        for t in all_trails(d, x, y)
        if _activated(d, t, zm)
    ]
    out.sort(key=lambda t: t.nodes)
    return out


@dataclass(frozen=True)
class DescendantPath:
    source: int
    interior: tuple[int, ...]
    target: int

    @property
    def length(self) -> int:
        return len(self.interior)

    @property
    def nodes(self) -> tuple[int, ...]:
        return (self.source, *self.interior, self.target)


@dataclass(frozen=True)
class ActivationWitness:
    """Why converging node ``node`` is open: it is in Z (``path is None``)
    or it reaches Z along ``path``."""

    node: int
    path: Optional[DescendantPath] = None

    @property
    def in_z(self) -> bool:
        return self.path is None

    @property
    def target(self) -> int:
        return self.node if self.path is None else self.path.target

    @property
    def length(self) -> int:
        return 0 if self.path is None else self.path.length


def closest_descendant(d: Dag, c: int, z: Iterable[int]) -> ActivationWitness:
    """Shortest directed path from ``c`` into Z whose interior avoids Z.

    Ties go to the lexicographically smallest node sequence: a layered BFS
    that expands nodes in queue order and children in index order reaches
    every node first along its lexicographically least shortest path.
    """
    return _closest(d, c, mask_of(z))


def _closest(d: Dag, c: int, zmask: int) -> ActivationWitness:
    if zmask >> c & 1:
        return ActivationWitness(c)
    parent = {c: None}
    layer = [c]
    while layer:
        nxt = []
        for v in layer:
            for u in nodes_of(d.ch[v]):
                if u in parent:
                    continue
                parent[u] = v
                if zmask >> u & 1:
                    path = [u]
                    while parent[path[-1]] is not None:
                        path.append(parent[path[-1]])
                    path.reverse()
                    return ActivationWitness(c, DescendantPath(c, tuple(path[1:-1]), u))
                nxt.append(u)
        layer = nxt
    raise NoDescendantInZ(f"no descendant of {d.name(c)} lies in Z")


@dataclass(frozen=True)
class TrailDecomposition:
    trail: Trail
    converging: tuple[int, ...]
    witnesses: tuple[ActivationWitness, ...]
    subtrails: tuple[Trail, ...] = field(repr=False)

    @property
    def C(self) -> int:
        return len(self.converging)

    @property
    def subtrail_lengths(self) -> tuple[int, ...]:
        """Interior node count of each subtrail."""
        return tuple(len(s.nodes) - 2 for s in self.subtrails)

    def join(self) -> Trail:
        nodes = list(self.subtrails[0].nodes)
        dirs = list(self.subtrails[0].dirs)
        for s in self.subtrails[1:]:
            if s.nodes[0] != nodes[-1]:
                raise ValueError("subtrails do not chain")
            nodes += s.nodes[1:]
            dirs += s.dirs
        return Trail(tuple(nodes), tuple(dirs))


def decompose(d: Dag, t: Trail, z: Iterable[int] = ()) -> TrailDecomposition:
    zmask = mask_of(z)
    if not _activated(d, t, zmask) or (1 << t.first | 1 << t.last) & zmask:
        raise NotActivated(f"trail {t.render(d)} is blocked by Z")
    cuts = (0, *t.converging_positions, len(t.nodes) - 1)
    subtrails = tuple(t.segment(i, j) for i, j in zip(cuts, cuts[1:]))
    witnesses = tuple(_closest(d, c, zmask) for c in t.converging)
    return TrailDecomposition(t, t.converging, witnesses, subtrails)


def chords(d: Dag, t: Trail) -> list[tuple[int, int]]:
    """Arcs of ``d`` joining two non-consecutive nodes of ``t``."""
    return chords_of(d, t.nodes)


def chords_of(d: Dag, nodes: Sequence[int]) -> list[tuple[int, int]]:
    out = []
    for i, u in enumerate(nodes):
        for v in nodes[i + 2 :]:
            if d.ch[u] >> v & 1:
                out.append((u, v))
            elif d.ch[v] >> u & 1:
                out.append((v, u))
    return sorted(out)


def common_ancestor(t: Trail) -> int:
    """Position of the common ancestor of a converging-free trail."""
    if t.converging_positions:
        raise HasConvergingConnection(f"trail {t.render()} has a converging connection")
    for i in range(1, len(t.nodes) - 1):
        if t.dirs[i - 1] is BACKWARD and t.dirs[i] is FORWARD:
            return i
    # all serial: whichever endpoint the arrows leave
    return 0 if t.dirs[0] is FORWARD else len(t.nodes) - 1


def shortest_constrained_trail(
    d: Dag,
    a: int,
    b: int,
    *,
    no_converging: bool = True,
    allowed_interior: Optional[Iterable[int]] = None,
    first_dir: Optional[Direction] = None,
    last_dir: Optional[Direction] = None,
) -> list[Trail]:
    """All trails of minimum node count from ``a`` to ``b`` meeting the constraints.

    ``allowed_interior`` restricts the interior nodes (endpoints are exempt);
    ``first_dir`` / ``last_dir`` fix the orientation of the first / last step.
    Returns ``[]`` when no trail qualifies.
    """
    if a == b:
        raise ValueError("trail endpoints must differ")
    allowed = d.all_mask if allowed_interior is None else mask_of(allowed_interior)
    allowed &= ~(1 << a | 1 << b)
    for arcs in range(1, d.n):
        found = list(_bounded_trails(d, a, b, arcs, allowed, no_converging, first_dir, last_dir))
        if found:
            return found
    return []


def _bounded_trails(d, a, b, arcs, allowed, no_converging, first_dir, last_dir):
    """Trails with exactly ``arcs`` steps, depth-first in index order."""
    nodes = [a]
    dirs: list[Direction] = []

    def extend(used):
        v = nodes[-1]
        depth = len(dirs)
        for u in d.nbrs[v]:
            last_step = depth == arcs - 1
            if last_step:
                if u != b:
                    continue
            elif not (allowed >> u & 1) or used >> u & 1:
                continue
            s = FORWARD if d.ch[v] >> u & 1 else BACKWARD
            if depth == 0 and first_dir is not None and s is not first_dir:
                continue
            if last_step and last_dir is not None and s is not last_dir:
                continue
            if no_converging and depth and dirs[-1] is FORWARD and s is BACKWARD:
                continue
            nodes.append(u)
            dirs.append(s)
            if last_step:
                yield Trail(tuple(nodes), tuple(dirs))
            else:
                yield from extend(used | 1 << u)
            nodes.pop()
            dirs.pop()

    yield from extend(1 << a)
