"""Active cycles and local relationships of node sets."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .dag import Dag, mask_of, nodes_of
from .errors import NotLocal
from .trails import BACKWARD, FORWARD, Trail, chords_of, d_separated_reachability


@dataclass(frozen=True)
class ActiveCycle:
    apex: int
    left_parent: int
    right_parent: int
    connector: Trail  # from left_parent to right_parent

    @property
    def nodes(self) -> tuple[int, ...]:
        """The closed trail ``apex, left_parent, ..., right_parent`` (apex not repeated)."""
        return (self.apex, *self.connector.nodes)

    def render(self, d: Optional[Dag] = None) -> str:
        name = d.name if d is not None else str
        a = name(self.apex)
        return f"{a} <- {self.connector.render(d)} -> {a}"


def is_active_cycle(d: Dag, cyc: ActiveCycle) -> bool:
    """Re-validate a witness against the definition, independently of the search."""
    v, w, z, conn = cyc.apex, cyc.left_parent, cyc.right_parent, cyc.connector
    if w == z or not (d.has_arc(w, v) and d.has_arc(z, v)):
        return False
    if conn.first != w or conn.last != z or v in conn.nodes:
        return False
    if len(conn.nodes) < 3:
        return False
    for a, b, s in zip(conn.nodes, conn.nodes[1:], conn.dirs):
        if not (d.has_arc(a, b) if s is FORWARD else d.has_arc(b, a)):
            return False
    if conn.converging_positions:
        return False
    cycle = cyc.nodes
    k = len(cycle)
    for i in range(k):
        for j in range(i + 1, k):
            consecutive = j == i + 1 or (i == 0 and j == k - 1)
            if not consecutive and d.adjacent(cycle[i], cycle[j]):
                return False
    return True


def _connectors(d: Dag, v: int, w: int, z: int):
    """Chordless converging-free trails w..z (with >= 1 interior node) closing
    an active cycle at apex v. Depth-first in index order with chord pruning."""
    adj = d.adj
    path = [w]
    dirs = []

    def extend(used):
        u0 = path[-1]
        earlier = used & ~(1 << u0)  # nodes a new node must not touch
        for u in d.nbrs[u0]:
            if used >> u & 1 or u == v:
                continue
            if adj[u] & earlier:
                continue
            s = FORWARD if d.ch[u0] >> u & 1 else BACKWARD
            if dirs and dirs[-1] is FORWARD and s is BACKWARD:
                continue
            if u == z:
                if len(path) >= 2:
                    nodes = (*path, z)
                    yield Trail(nodes, (*dirs, s))
                continue
            if adj[u] >> v & 1:
                continue
            path.append(u)
            dirs.append(s)
            yield from extend(used | 1 << u)
            path.pop()
            dirs.pop()

    yield from extend(1 << w)


def find_active_cycles(d: Dag, stop_at_first: bool = False) -> list[ActiveCycle]:
    """Active cycles of ``d``, one per (apex, unordered parent pair, connector).

    Each cycle is reported once, with ``left_parent < right_parent``.
    """
    found = []
    for v in range(d.n):
        for w, z in combinations(nodes_of(d.pa[v]), 2):
            if d.adjacent(w, z):
                continue
            for conn in _connectors(d, v, w, z):
                found.append(ActiveCycle(v, w, z, conn))
                if stop_at_first:
                    return found
    return found


def has_active_cycle(d: Dag) -> bool:
    hit = d._cache.get("active_cycle")
    if hit is None:
        hit = d._cache["active_cycle"] = bool(find_active_cycles(d, stop_at_first=True))
    return hit


@dataclass(frozen=True)
class LocalCheck:
    ok: bool
    witness: Optional[tuple[int, int, Trail]] = None

    def __bool__(self):
        return self.ok


def _open_reach(d: Dag, start: int, kmask: int):
    """Shortest converging-free trails from ``start`` whose interior avoids K.

    A converging-free trail climbs to ancestors and then descends, so the
    search runs over (node, descending?) states. BFS shortest walks are simple.
    Returns {reached K-node: Trail}.
    """
    prev = {(start, False): None}
    frontier = [(start, False)]
    hits = {}
    while frontier:
        nxt = []
        for state in frontier:
            v, down = state
            moves = [(c, True) for c in nodes_of(d.ch[v])]
            if not down:
                moves = [(p, False) for p in nodes_of(d.pa[v])] + moves
            for s in moves:
                u = s[0]
                if s in prev or u == start:
                    continue
                prev[s] = state
                if kmask >> u & 1:
                    if u not in hits:
                        walk = [u]
                        cur = state
                        while cur is not None:
                            walk.append(cur[0])
                            cur = prev[cur]
                        hits[u] = Trail.from_nodes(d, walk[::-1])
                    continue
                nxt.append(s)
        frontier = nxt
    return hits


def has_local_relationships(d: Dag, K: Iterable[int]) -> LocalCheck:
    """Whether every converging-free trail between two K-nodes with interior
    outside K joins adjacent nodes. On failure the witness is
    ``(v1, v2, trail)`` for the smallest offending pair."""
    kmask = mask_of(K)
    for v1 in nodes_of(kmask):
        hits = _open_reach(d, v1, kmask)
        for v2 in sorted(hits):
            if v2 > v1 and not d.adjacent(v1, v2):
                return LocalCheck(False, (v1, v2, hits[v2]))
    return LocalCheck(True)


def skeleton_components(d: Dag, K: Iterable[int]) -> list[frozenset[int]]:
    """Connected components of the skeleton of the subgraph induced by K."""
    kmask = mask_of(K)
    left = kmask
    out = []
    while left:
        seed = left & -left
        comp = seed
        grow = seed
        while grow:
            nb = 0
            for v in nodes_of(grow):
                nb |= d.adj[v]
            grow = nb & kmask & ~comp
            comp |= grow
        out.append(frozenset(nodes_of(comp)))
        left &= ~comp
    return out


def decompose_local(d: Dag, K: Iterable[int]) -> list[frozenset[int]]:
    """Split K into connected blocks that have local relationships and are
    pairwise d-separated by the empty set."""
    K = tuple(K)
    check = has_local_relationships(d, K)
    if not check:
        v1, v2, t = check.witness
        raise NotLocal(
            f"{d.name(v1)} and {d.name(v2)} are not adjacent but joined by {t.render(d)}",
            check.witness,
        )
    blocks = skeleton_components(d, K)
    for b in blocks:
        assert has_local_relationships(d, b), b
    for b1, b2 in combinations(blocks, 2):
        assert d_separated_reachability(d, b1, b2, ()), (b1, b2)
    return blocks


def local_after_removal(d: Dag, v: int) -> bool:
    """Whether V minus {v} keeps local relationships: every serial or diverging
    pair of neighbours around v must be adjacent."""
    pa = list(nodes_of(d.pa[v]))
    ch = list(nodes_of(d.ch[v]))
    # converging pairs (both parents) are exempt
    pairs = [(p, c) for p in pa for c in ch] + list(combinations(ch, 2))
    return all(d.adjacent(a, b) for a, b in pairs)


class Verdict(enum.Enum):
    CONNECTED_IN_K = "connected in K"
    D_SEPARATED_BY_EMPTY = "d-separated by the empty set"


def connected_or_dsep(d: Dag, K: Iterable[int], v1: int, v2: int) -> Verdict:
    """For K with local relationships: report that v1 and v2 are connected in K,
    or else that they are d-separated by the empty set (one of the two always holds).

    Connectivity wins when both hold.
    """
    K = frozenset(K)
    if v1 == v2 or v1 not in K or v2 not in K:
        raise ValueError("need two distinct members of K")
    check = has_local_relationships(d, K)
    if not check:
        raise NotLocal("K does not have local relationships", check.witness)
    for block in skeleton_components(d, K):
        if v1 in block:
            if v2 in block:
                return Verdict.CONNECTED_IN_K
            break
    assert d_separated_reachability(d, {v1}, {v2}, ()), (v1, v2)
    return Verdict.D_SEPARATED_BY_EMPTY
