"""The strict partial order on activated trails and its minimal elements.

Trails are compared through a 4-component key, lexicographically:

1. converging nodes not in Z,
2. converging nodes,
3. total length of the descendant paths,
4. total length of the subtrails.

Trails with equal keys are incomparable.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .dag import Dag, mask_of, nodes_of
from .trails import Trail, TrailDecomposition, decompose, trails_xyz


class TrailKey(NamedTuple):
    open_converging: int  # converging nodes outside Z
    converging: int
    descendant_length: int
    subtrail_length: int


class OrderResult(enum.Enum):
    LESS = "less"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


def key_of(dec: TrailDecomposition, z) -> TrailKey:
    zmask = mask_of(z)
    return TrailKey(
        sum(1 for c in dec.converging if not zmask >> c & 1),
        dec.C,
        sum(w.length for w in dec.witnesses),
        sum(dec.subtrail_lengths),
    )


def trail_key(d: Dag, t: Trail, z=()) -> TrailKey:
    z = tuple(z)
    return key_of(decompose(d, t, z), z)


def compare(a: TrailKey, b: TrailKey) -> OrderResult:
    if a < b:
        return OrderResult.LESS
    if a > b:
        return OrderResult.GREATER
    return OrderResult.INCOMPARABLE


def smaller(a: TrailKey, b: TrailKey) -> bool:
    return compare(a, b) is OrderResult.LESS


def minimal_by_dominance(keys: Sequence[TrailKey]) -> list[int]:
    """Indices of keys that no other key is strictly smaller than (pairwise scan)."""
    return [
        i for i, k in enumerate(keys) if not any(smaller(other, k) for other in keys)
    ]


@dataclass(frozen=True)
class MinimalTrails:
    key: Optional[TrailKey]
    trails: tuple[Trail, ...]
    decompositions: tuple[TrailDecomposition, ...]

    def __bool__(self):
        return bool(self.trails)


def _distance_to(d: Dag, zmask: int) -> dict[int, int]:
    """Arc count of the shortest directed path from each node into Z."""
    dist = {z: 0 for z in nodes_of(zmask)}
    layer = list(dist)
    while layer:
        nxt = []
        for v in layer:
            for p in nodes_of(d.pa[v]):
                if p not in dist:
                    dist[p] = dist[v] + 1
                    nxt.append(p)
        layer = nxt
    return dist


def scored_trails(d: Dag, X, Y, Z=()) -> list[tuple[TrailKey, Trail]]:
    """Every activated trail with its key, without building decompositions."""
    Z = tuple(Z)
    zmask = mask_of(Z)
    dist = _distance_to(d, zmask)
    out = []
    for t in trails_xyz(d, X, Y, Z):
        conv = t.converging
        open_ = [c for c in conv if not zmask >> c & 1]
        out.append((
            TrailKey(len(open_), len(conv), sum(dist[c] - 1 for c in open_),
                     len(t.nodes) - 2 - len(conv)),
            t,
        ))
    return out


def pick_minimal(d: Dag, scored, Z=()) -> MinimalTrails:
    if not scored:
        return MinimalTrails(None, (), ())
    best = min(k for k, _ in scored)
    keep = tuple(t for k, t in scored if k == best)
    return MinimalTrails(best, keep, tuple(decompose(d, t, Z) for t in keep))


def minimal_trails(d: Dag, X, Y, Z=()) -> MinimalTrails:
    """Minimal elements of the activated trails from X to Y given Z.

    An empty result (``key is None``) means X and Y are d-separated by Z.
    """
    Z = tuple(Z)
    return pick_minimal(d, scored_trails(d, X, Y, Z), Z)
