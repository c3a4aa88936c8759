"""Graph generation and mechanical checks of the minimal-trail results.

Every check takes a single DAG and returns a :class:`CheckReport`. A graph or
query that does not meet a result's hypotheses is counted as *skipped*, never
as a pass. Checks recompute their own hypotheses from the primitive
operations; none of them relies on another result holding.
"""
from __future__ import annotations

import random
import zlib
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Callable, Iterable, Iterator, Optional

from .dag import Dag, build_dag, induced_subgraph, nodes_of
from .errors import UnknownCheckName
from .formats import graph_to_doc
from .order import minimal_by_dominance, pick_minimal, scored_trails
from .structure import (
    find_active_cycles,
    has_active_cycle,
    has_local_relationships,
    is_active_cycle,
)
from .trails import (
    BACKWARD,
    FORWARD,
    Trail,
    all_trails,
    chords,
    chords_of,
    is_activated,
    shortest_constrained_trail,
)

# all Z subsets are enumerated up to this node count; larger graphs sample
EXHAUSTIVE_QUERY_N = 5
SAMPLED_Z_PER_PAIR = 6
MAX_STORED_FAILURES = 50


# --------------------------------------------------------------------------
# generation


@dataclass(frozen=True)
class GenSpec:
    """``mode`` is ``"exhaustive"`` (every labelled DAG on ``n`` nodes) or
    ``"random"`` (``count`` draws, each pair joined with probability ``p``).
    With ``require_no_active_cycle`` the stream is filtered afterwards, so
    random mode may emit fewer than ``count`` graphs."""

    mode: str
    n: int
    p: float = 0.5
    seed: int = 0
    count: int = 1
    require_no_active_cycle: bool = False

    def __post_init__(self):
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown generation mode {self.mode!r}")
        if self.n < 1:
            raise ValueError("n must be at least 1")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError("p must lie in [0, 1]")

    @classmethod
    def exhaustive(cls, n, **kw):
        return cls("exhaustive", n, **kw)

    @classmethod
    def random(cls, n, p, seed, count, **kw):
        return cls("random", n, p=p, seed=seed, count=count, **kw)


def _acyclic(n, ch):
    # peel sources off a bitmask graph
    left = (1 << n) - 1
    while left:
        src = 0
        for v in nodes_of(left):
            has_parent = False
            for u in nodes_of(left):
                if ch[u] >> v & 1:
                    has_parent = True
                    break
            if not has_parent:
                src |= 1 << v
        if not src:
            return False
        left &= ~src
    return True


def _exhaustive(n) -> Iterator[Dag]:
    pairs = list(combinations(range(n), 2))
    for code in product((0, 1, 2), repeat=len(pairs)):
        ch = [0] * n
        arcs = []
        for (i, j), c in zip(pairs, code):
            if c == 1:
                ch[i] |= 1 << j
                arcs.append((i, j))
            elif c == 2:
                ch[j] |= 1 << i
                arcs.append((j, i))
        if _acyclic(n, ch):
            yield build_dag(n, arcs)


def _random(n, p, seed, count) -> Iterator[Dag]:
    rng = random.Random(seed)
    for _ in range(count):
        perm = rng.sample(range(n), n)
        arcs = [
            (perm[i], perm[j])
            for i in range(n)
            for j in range(i + 1, n)
            if rng.random() < p
        ]
        yield build_dag(n, arcs)


def generate(spec: GenSpec) -> Iterator[Dag]:
    if spec.mode == "exhaustive":
        stream = _exhaustive(spec.n)
    else:
        stream = _random(spec.n, spec.p, spec.seed, spec.count)
    if spec.require_no_active_cycle:
        stream = (d for d in stream if not has_active_cycle(d))
    return stream


# --------------------------------------------------------------------------
# reports


@dataclass
class Failure:
    clause: str
    query: dict
    detail: str = ""
    graph: Optional[dict] = None
    serial: Optional[int] = None

    def to_dict(self):
        return {
            "serial": self.serial,
            "clause": self.clause,
            "query": self.query,
            "detail": self.detail,
            "graph": self.graph,
        }


@dataclass
class CheckReport:
    name: str
    graphs: int = 0
    graphs_skipped: int = 0
    instances: int = 0
    instances_skipped: int = 0
    failure_count: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def fail(self, d: Dag, clause: str, query: dict, detail: str = ""):
        self.failure_count += 1
        if len(self.failures) < MAX_STORED_FAILURES:
            self.failures.append(Failure(clause, query, detail, graph_to_doc(d)))

    def merge(self, other: "CheckReport", serial: Optional[int] = None) -> "CheckReport":
        self.graphs += other.graphs
        self.graphs_skipped += other.graphs_skipped
        self.instances += other.instances
        self.instances_skipped += other.instances_skipped
        self.failure_count += other.failure_count
        for f in other.failures:
            if len(self.failures) >= MAX_STORED_FAILURES:
                break
            if serial is not None:
                f.serial = serial
            self.failures.append(f)
        return self

    def to_dict(self):
        return {
            "check": self.name,
            "passed": self.passed,
            "graphs": self.graphs,
            "graphs_skipped": self.graphs_skipped,
            "instances": self.instances,
            "instances_skipped": self.instances_skipped,
            "failure_count": self.failure_count,
            "failures": [f.to_dict() for f in self.failures],
        }


# --------------------------------------------------------------------------
# helpers


def _names(d, nodes):
    return [d.name(v) for v in nodes]


def _q(d, **sets):
    return {k: _names(d, v) if isinstance(v, (list, tuple, set, frozenset)) else d.name(v)
            for k, v in sets.items()}


def _graph_rng(d: Dag) -> random.Random:
    return random.Random(zlib.crc32(repr((d.n, d.arcs)).encode()))


def _subsets(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, ascending."""
    members = list(nodes_of(mask))
    for bits in range(1 << len(members)):
        yield sum(1 << members[i] for i in range(len(members)) if bits >> i & 1)


def _z_choices(d: Dag, rest: int, rng: random.Random) -> list[int]:
    if d.n <= EXHAUSTIVE_QUERY_N:
        return list(_subsets(rest))
    members = list(nodes_of(rest))
    picks = {0}
    for _ in range(SAMPLED_Z_PER_PAIR - 1):
        picks.add(sum(1 << v for v in members if rng.random() < 0.3))
    return sorted(picks)


def _queries(d: Dag) -> Iterator[tuple[int, int, int]]:
    """(x, y, Z-mask) with singleton X and Y."""
    rng = _graph_rng(d)
    full = d.all_mask
    for x in range(d.n):
        for y in range(d.n):
            if x != y:
                for z in _z_choices(d, full & ~(1 << x | 1 << y), rng):
                    yield x, y, z


def _gate(d: Dag, rep: CheckReport, strict: bool) -> bool:
    """Count the graph; return False (and count a skip) when it has an active cycle."""
    rep.graphs += 1
    if strict and has_active_cycle(d):
        rep.graphs_skipped += 1
        return False
    return True


def _scored(d: Dag, x: int, y: int, z: int):
    """Scored trails and the minimal set for one query, memoised on the graph
    so the two minimal-trail checks share the work."""
    key = ("minimal", x, y, z)
    hit = d._cache.get(key)
    if hit is None:
        zs = tuple(nodes_of(z))
        every = scored_trails(d, (x,), (y,), zs)
        hit = d._cache[key] = (every, pick_minimal(d, every, zs))
    return hit


def _arc(d, u, v):
    return d.ch[u] >> v & 1


# --------------------------------------------------------------------------
# checks


def check_activation_lemma(d: Dag, strict: bool = True) -> CheckReport:
    """Activated by the empty set <=> no converging connection, for every trail."""
    rep = CheckReport("activation_lemma", graphs=1)
    for a, b in combinations(range(d.n), 2):
        for t in all_trails(d, a, b):
            rep.instances += 1
            if is_activated(d, t, ()) != (not t.converging_positions):
                rep.fail(d, "lemma", _q(d, x=a, y=b), t.render(d))
    return rep


def check_no_chords(d: Dag, strict: bool = True) -> CheckReport:
    """A shortest trail activated by the empty set has no chords."""
    rep = CheckReport("no_chords")
    if not _gate(d, rep, strict):
        return rep
    for a, b in combinations(range(d.n), 2):
        open_ = [t for t in all_trails(d, a, b) if is_activated(d, t, ())]
        if not open_:
            rep.instances_skipped += 1
            continue
        rep.instances += 1
        best = min(len(t.nodes) for t in open_)
        for t in open_:
            if len(t.nodes) == best and chords(d, t):
                rep.fail(d, "no-chords", _q(d, x=a, y=b), t.render(d))
    return rep


def common_children_violations(d: Dag, t: Trail) -> list[str]:
    """Clauses of the common-children result violated by trail ``t``."""
    shared = d.ch[t.first] & d.ch[t.last]
    bad = []
    for x in t.interior:
        if shared & ~d.ch[x]:
            bad.append(f"(i): {d.name(x)} misses a common child of the endpoints")
        if shared >> x & 1:
            bad.append(f"(ii): {d.name(x)} is itself a common child of the endpoints")
    return bad


def _k_choices(d: Dag, rest: int) -> list[int]:
    if d.n <= EXHAUSTIVE_QUERY_N + 1:
        return list(_subsets(rest))
    ks = {rest} | {rest & ~(1 << v) for v in nodes_of(rest)}
    rng = _graph_rng(d)
    members = list(nodes_of(rest))
    for _ in range(SAMPLED_Z_PER_PAIR):
        ks.add(sum(1 << v for v in members if rng.random() < 0.5))
    return sorted(ks)


def check_common_children(d: Dag, strict: bool = True) -> CheckReport:
    """Shortest open trails, optionally with interior restricted to K:
    (i) every common child of the endpoints is a child of each interior node;
    (ii) no interior node is a common child of the endpoints."""
    rep = CheckReport("common_children")
    if not _gate(d, rep, strict):
        return rep
    full = d.all_mask
    for a, b in combinations(range(d.n), 2):
        rest = full & ~(1 << a | 1 << b)
        for k in _k_choices(d, rest):
            found = shortest_constrained_trail(d, a, b, allowed_interior=nodes_of(k))
            if not found:
                rep.instances_skipped += 1
                continue
            rep.instances += 1
            label = "lemma" if k == rest else "corollary"
            for t in found:
                for clause in common_children_violations(d, t):
                    rep.fail(d, f"{label} {clause}", _q(d, x=a, y=b, k=list(nodes_of(k))),
                             t.render(d))
    return rep


def arc_start_violations(d: Dag, t: Trail) -> list[str]:
    """Required arcs when t = v1 <- x1 ... xn .. v2 is a shortest open trail
    starting into v1 and v1 -> v2: a directed chain x1 -> ... -> xn -> v2 and
    v1 -> xi for i >= 2."""
    v1, v2 = t.first, t.last
    xs = t.interior
    bad = []
    if not _arc(d, v1, v2):
        bad.append("hypothesis: no arc v1 -> v2")
    chain = (*xs, v2)
    for u, w in zip(chain, chain[1:]):
        if not _arc(d, u, w):
            bad.append(f"chain: missing {d.name(u)} -> {d.name(w)}")
    for x in xs[1:]:
        if not _arc(d, v1, x):
            bad.append(f"fan: missing {d.name(v1)} -> {d.name(x)}")
    return bad


def shared_child_violations(d: Dag, t: Trail) -> list[str]:
    """Required arcs when v1, v2 share a child and t = v1 .. xn -> v2 is a
    shortest open trail avoiding that child's parents: xn -> ... -> x1 -> v1,
    v2 -> v1, and v2 -> xi for i < n."""
    v1, v2 = t.first, t.last
    xs = t.interior
    bad = []
    if not _arc(d, v2, v1):
        bad.append(f"missing {d.name(v2)} -> {d.name(v1)}")
    chain = (v1, *xs)
    for u, w in zip(chain, chain[1:]):
        if not _arc(d, w, u):
            bad.append(f"chain: missing {d.name(w)} -> {d.name(u)}")
    if xs and not _arc(d, xs[-1], v2):
        bad.append(f"missing {d.name(xs[-1])} -> {d.name(v2)}")
    for x in xs[:-1]:
        if not _arc(d, v2, x):
            bad.append(f"fan: missing {d.name(v2)} -> {d.name(x)}")
    return bad


def check_subgraph_theorems(d: Dag, strict: bool = True) -> CheckReport:
    """The two forcing-subgraph results for open subtrails."""
    rep = CheckReport("subgraph_theorems")
    if not _gate(d, rep, strict):
        return rep
    for v1, v2 in d.arcs:
        for last, tag in ((None, "arc-start"), (FORWARD, "arc-start/ends-forward")):
            found = shortest_constrained_trail(d, v1, v2, first_dir=BACKWARD, last_dir=last)
            if not found:
                rep.instances_skipped += 1
                continue
            rep.instances += 1
            for t in found:
                for clause in arc_start_violations(d, t):
                    rep.fail(d, f"{tag} {clause}", _q(d, v1=v1, v2=v2), t.render(d))
    full = d.all_mask
    for v3 in range(d.n):
        pa = d.pa[v3]
        allowed = full & ~pa & ~(1 << v3)
        for v1, v2 in product(nodes_of(pa), repeat=2):
            if v1 == v2:
                continue
            found = shortest_constrained_trail(
                d, v1, v2, allowed_interior=nodes_of(allowed), last_dir=FORWARD
            )
            if not found or len(found[0].nodes) == 2:
                rep.instances_skipped += 1
                continue
            rep.instances += 1
            for t in found:
                for clause in shared_child_violations(d, t):
                    rep.fail(d, f"shared-child {clause}", _q(d, v1=v1, v2=v2, v3=v3),
                             t.render(d))
    return rep


def _chordless(d, nodes):
    return not chords_of(d, nodes)


def minimal_trail_violations(d: Dag, dec, x: int, y: int, zmask: int) -> list[str]:
    """Properties (i)-(v) of a minimal activated trail, given its decomposition."""
    bad = []
    outside = 1 << x | 1 << y | zmask
    subs = dec.subtrails
    C = dec.C
    cs = (x, *dec.converging, y)
    not_z = [v for v in range(d.n) if not zmask >> v & 1]

    for i, s in enumerate(subs):
        for t in s.interior:
            if outside >> t & 1:
                bad.append(f"(i): subtrail node {d.name(t)} in X, Y or Z")
    for w in dec.witnesses:
        if w.path is not None:
            for u in w.path.interior:
                if outside >> u & 1:
                    bad.append(f"(i): descendant-path node {d.name(u)} in X, Y or Z")
            if not _chordless(d, w.path.nodes):
                bad.append(f"(ii): descendant path of {d.name(w.node)} has a chord")

    for i in range(1, C):
        if not _chordless(d, subs[i].interior):
            bad.append(f"(ii): interior of subtrail {i} has a chord")
    if C:
        if not _chordless(d, subs[0].nodes[:-1]):
            bad.append("(ii): first subtrail (without c1) has a chord")
        if not _chordless(d, subs[-1].nodes[1:]):
            bad.append("(ii): last subtrail (without cC) has a chord")

    for i in range(1, C):
        a, b = cs[i], cs[i + 1]
        if _arc(d, a, b) and zmask >> b & 1 and not zmask >> a & 1:
            bad.append(f"(iii): {d.name(a)} -> {d.name(b)} with only {d.name(b)} in Z")
        if _arc(d, b, a) and zmask >> a & 1 and not zmask >> b & 1:
            bad.append(f"(iv): {d.name(a)} <- {d.name(b)} with only {d.name(a)} in Z")

    for i in range(1, C + 1):
        last = FORWARD if i < C else None
        best = shortest_constrained_trail(
            d, cs[i], cs[i + 1], allowed_interior=not_z, first_dir=BACKWARD, last_dir=last
        )
        if not best or len(best[0].nodes) != len(subs[i].nodes):
            bad.append(f"(v): subtrail {i} is not a shortest qualifying trail")
    return bad


def check_minimal_trail_theorem(d: Dag, strict: bool = True) -> CheckReport:
    """Properties (i)-(v) of every minimal trail for singleton X and Y."""
    rep = CheckReport("minimal_trail_theorem")
    if not _gate(d, rep, strict):
        return rep
    for x, y, z in _queries(d):
        zs = tuple(nodes_of(z))
        every, res = _scored(d, x, y, z)
        if not every:
            rep.instances_skipped += 1
            continue
        rep.instances += 1
        q = None
        # minimal elements by pairwise dominance must be exactly the min-key trails
        keys = [k for k, _ in every]
        by_dom = {every[i][1] for i in minimal_by_dominance(keys)}
        if by_dom != set(res.trails):
            q = _q(d, x=x, y=y, z=zs)
            rep.fail(d, "minimal elements differ from min-key trails", q)
        for t, dec in zip(res.trails, res.decompositions):
            for clause in minimal_trail_violations(d, dec, x, y, z):
                q = q or _q(d, x=x, y=y, z=zs)
                rep.fail(d, clause, q, t.render(d))
    return rep


def fan_pattern(d: Dag, s: Trail) -> Optional[str]:
    """Which forcing subgraph the subtrail ``c_i <- t1 .. tn .. c_{i+1}`` embeds:
    ``"forward"`` (c_i -> c_{i+1}, chain t1 -> .. -> tn -> c_{i+1}, c_i -> tj
    for j >= 2), ``"backward"`` (c_{i+1} -> c_i, chain tn -> .. -> t1 -> c_i,
    tn -> c_{i+1}, c_{i+1} -> tj for j < n), or None."""
    u, w, ts = s.first, s.last, s.interior
    fwd = _arc(d, u, w) and (not ts or _arc(d, ts[0], u))
    fwd = fwd and all(_arc(d, a, b) for a, b in zip(ts, (*ts[1:], w)))
    fwd = fwd and all(_arc(d, u, t) for t in ts[1:])
    if fwd:
        return "forward"
    bwd = _arc(d, w, u) and all(_arc(d, b, a) for a, b in zip((u, *ts), ts))
    bwd = bwd and (not ts or _arc(d, ts[-1], w))
    bwd = bwd and all(_arc(d, w, t) for t in ts[:-1])
    return "backward" if bwd else None


def local_rel_violations(d: Dag, dec, y: int, zmask: int) -> list[str]:
    """Properties (i)-(iv) and the three corollary clauses under local relationships."""
    bad = []
    C = dec.C
    cs = (*dec.converging, y)  # cs[i - 1] is c_i; cs[C] is y
    inz = [bool(zmask >> c & 1) for c in dec.converging]
    if not inz[-1]:
        bad.append(f"(i): final converging node {d.name(cs[C - 1])} not in Z")
    for i in range(C - 1):
        if not (inz[i] or inz[i + 1]):
            bad.append(f"(ii): neither {d.name(cs[i])} nor {d.name(cs[i + 1])} in Z")
    for i in range(C):
        if not d.adjacent(cs[i], cs[i + 1]):
            bad.append(f"(iii): {d.name(cs[i])} and {d.name(cs[i + 1])} not adjacent")
    for i in range(1, C + 1):
        if fan_pattern(d, dec.subtrails[i]) is None:
            bad.append(f"(iv): subtrail {i} matches neither forcing subgraph")

    conv = dec.converging
    if all(_arc(d, a, b) for a, b in zip(conv, conv[1:])) and not all(inz):
        bad.append("corollary (i): c1 -> ... -> cC but not all in Z")
    if inz[0] and all(_arc(d, b, a) for a, b in zip(conv, conv[1:])) and not all(inz):
        bad.append("corollary (ii): c1 in Z, c1 <- ... <- cC but not all in Z")
    for i in range(1, C - 1):
        into = _arc(d, conv[i - 1], conv[i]) and _arc(d, conv[i + 1], conv[i])
        if not into and not inz[i]:
            bad.append(f"corollary (iii): {d.name(conv[i])} not converging among c's yet not in Z")
    return bad


def check_local_rel_theorem(d: Dag, strict: bool = True) -> CheckReport:
    """Minimal trails when Y + Z has local relationships."""
    rep = CheckReport("local_rel_theorem")
    if not _gate(d, rep, strict):
        return rep
    local = {}
    for x, y, z in _queries(d):
        yz = z | 1 << y
        if yz not in local:
            local[yz] = has_local_relationships(d, nodes_of(yz)).ok
        if not local[yz]:
            rep.instances_skipped += 1
            continue
        zs = tuple(nodes_of(z))
        res = _scored(d, x, y, z)[1]
        if not res or res.key.converging == 0:
            rep.instances_skipped += 1
            continue
        rep.instances += 1
        for t, dec in zip(res.trails, res.decompositions):
            for clause in local_rel_violations(d, dec, y, z):
                rep.fail(d, clause, _q(d, x=x, y=y, z=zs), t.render(d))
    return rep


def check_removal_closure(d: Dag, strict: bool = True) -> CheckReport:
    """Deleting a node from a graph without active cycles creates none."""
    rep = CheckReport("removal_closure")
    if not _gate(d, rep, strict):
        return rep
    for v in range(d.n):
        rep.instances += 1
        sub, _ = induced_subgraph(d, [u for u in range(d.n) if u != v])
        if find_active_cycles(sub, stop_at_first=True):
            rep.fail(d, "deleting a node introduced an active cycle", _q(d, removed=v))
    return rep


def _brute_force_cycles(d: Dag) -> set:
    from .structure import ActiveCycle
    from .trails import enumerate_trails

    out = set()
    for v in range(d.n):
        for w, z in combinations(nodes_of(d.pa[v]), 2):
            for t in enumerate_trails(d, w, z):
                cyc = ActiveCycle(v, w, z, t)
                if is_active_cycle(d, cyc):
                    out.add(cyc)
    return out


def check_active_cycles(d: Dag, strict: bool = True) -> CheckReport:
    """Negative control: the pruned active-cycle search returns exactly the
    witnesses a brute-force scan over all trails finds, each re-validated."""
    rep = CheckReport("active_cycles", graphs=1)
    found = find_active_cycles(d)
    rep.instances += 1
    for c in found:
        if not is_active_cycle(d, c):
            rep.fail(d, "witness fails re-validation", {}, c.render(d))
    if set(found) != _brute_force_cycles(d) or len(found) != len(set(found)):
        rep.fail(d, "search disagrees with brute force", {})
    return rep


def dsep_agreement(d: Dag, queries: Optional[Iterable[tuple[int, int, int]]] = None):
    """Compare the enumeration and reachability d-separation oracles.

    ``queries`` are (x, y, Z-mask) triples; by default every singleton query.
    Returns (number of queries, list of disagreeing queries).
    """
    from .trails import _activated, reachable

    if queries is None:
        full = d.all_mask
        queries = (
            (x, y, z)
            for x in range(d.n)
            for z in _subsets(full & ~(1 << x))
            for y in range(d.n)
            if y != x and not z >> y & 1
        )
    count = 0
    bad = []
    reach = {}
    for x, y, z in queries:
        count += 1
        r = reach.get((x, z))
        if r is None:
            r = reach[(x, z)] = reachable(d, 1 << x, z)
        by_reach = not r >> y & 1
        by_enum = not any(_activated(d, t, z) for t in all_trails(d, x, y))
        if by_reach != by_enum:
            bad.append((x, y, z))
    return count, bad


CHECKS: dict[str, Callable[..., CheckReport]] = {
    "activation_lemma": check_activation_lemma,
    "no_chords": check_no_chords,
    "common_children": check_common_children,
    "subgraph_theorems": check_subgraph_theorems,
    "minimal_trail_theorem": check_minimal_trail_theorem,
    "local_rel_theorem": check_local_rel_theorem,
    "removal_closure": check_removal_closure,
    "active_cycles": check_active_cycles,
}


def run_check(name: str, d: Dag, strict: bool = True) -> CheckReport:
    try:
        fn = CHECKS[name]
    except KeyError:
        raise UnknownCheckName(name) from None
    return fn(d, strict=strict)


def run_suite(
    spec: GenSpec,
    checks: Optional[Iterable[str]] = None,
    strict: bool = True,
    progress: Optional[Callable[[int], None]] = None,
) -> list[CheckReport]:
    """Run the named checks (default: all) over every generated graph.

    Failures carry the serial number of the graph in the generated stream.
    """
    names = list(CHECKS) if checks is None else list(checks)
    for nm in names:
        if nm not in CHECKS:
            raise UnknownCheckName(nm)
    totals = {nm: CheckReport(nm) for nm in names}
    for serial, d in enumerate(generate(spec)):
        for nm in names:
            totals[nm].merge(CHECKS[nm](d, strict=strict), serial=serial)
        if progress is not None:
            progress(serial)
    return [totals[nm] for nm in names]


def labeled_dag_count(n: int) -> int:
    """Number of labelled DAGs on n nodes (Robinson's recurrence)."""
    from math import comb

    a = [1]
    for m in range(1, n + 1):
        a.append(sum((-1) ** (k + 1) * comb(m, k) * 2 ** (k * (m - k)) * a[m - k]
                     for k in range(1, m + 1)))
    return a[n]
