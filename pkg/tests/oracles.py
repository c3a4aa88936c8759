"""Slow, obviously-correct reference implementations used only by the tests.

None of these share code with the package beyond the Dag container itself.
"""
from itertools import combinations, permutations


def arcset(d):
    return set(d.arcs)


def closure(d):
    """Boolean reachability matrix by Warshall's algorithm."""
    n = d.n
    r = [[False] * n for _ in range(n)]
    for u, v in d.arcs:
        r[u][v] = True
    for k in range(n):
        for i in range(n):
            if r[i][k]:
                for j in range(n):
                    if r[k][j]:
                        r[i][j] = True
    return r


def trails_brute(d, x, y):
    """Every simple skeleton path from x to y, as node tuples, via permutations."""
    arcs = arcset(d)
    others = [v for v in range(d.n) if v not in (x, y)]
    out = []
    for k in range(len(others) + 1):
        for mid in permutations(others, k):
            nodes = (x, *mid, y)
            if all((a, b) in arcs or (b, a) in arcs for a, b in zip(nodes, nodes[1:])):
                out.append(nodes)
    return out


def converging_nodes(d, nodes):
    arcs = arcset(d)
    return [
        nodes[i]
        for i in range(1, len(nodes) - 1)
        if (nodes[i - 1], nodes[i]) in arcs and (nodes[i + 1], nodes[i]) in arcs
    ]


def activated_brute(d, nodes, z):
    z = set(z)
    reach = closure(d)
    conv = set(converging_nodes(d, nodes))
    for v in nodes[1:-1]:
        if v in conv:
            if v not in z and not any(reach[v][w] for w in z):
                return False
        elif v in z:
            return False
    return True


def dsep_moral(d, X, Y, Z):
    """d-separation via the moralised ancestral graph (an independent criterion)."""
    reach = closure(d)
    S = set(X) | set(Y) | set(Z)
    keep = {v for v in range(d.n) if v in S or any(reach[v][s] for s in S)}
    und = {v: set() for v in keep}
    for u, v in d.arcs:
        if u in keep and v in keep:
            und[u].add(v)
            und[v].add(u)
    for v in keep:
        pa = [u for u, w in d.arcs if w == v and u in keep]
        for a, b in combinations(pa, 2):
            und[a].add(b)
            und[b].add(a)
    seen = set(X)
    stack = list(X)
    while stack:
        v = stack.pop()
        for u in und[v]:
            if u not in seen and u not in Z:
                seen.add(u)
                stack.append(u)
    return not (seen & set(Y))


def directed_paths(d, a, b):
    """Every directed path a -> ... -> b as a node tuple."""
    out = []
    ch = {v: [w for u, w in d.arcs if u == v] for v in range(d.n)}

    def go(path):
        if path[-1] == b:
            out.append(tuple(path))
            return
        for w in ch[path[-1]]:
            if w not in path:
                go(path + [w])

    go([a])
    return out


def has_chord(d, cycle_or_path, closed=False):
    arcs = arcset(d)
    k = len(cycle_or_path)
    for i in range(k):
        for j in range(i + 2, k):
            if closed and i == 0 and j == k - 1:
                continue
            a, b = cycle_or_path[i], cycle_or_path[j]
            if (a, b) in arcs or (b, a) in arcs:
                return True
    return False


def active_cycles_brute(d):
    """Set of (apex, {w, z}, connector nodes up to reversal) for every active cycle."""
    arcs = arcset(d)
    found = set()
    for v in range(d.n):
        pa = [u for u in range(d.n) if (u, v) in arcs]
        for w, z in combinations(pa, 2):
            for nodes in trails_brute(d, w, z):
                if v in nodes or len(nodes) < 3:
                    continue
                if converging_nodes(d, nodes):
                    continue
                if has_chord(d, (v, *nodes), closed=True):
                    continue
                found.add((v, nodes))
    return found


def local_brute(d, K):
    """has_local_relationships straight from the definition."""
    K = set(K)
    for a, b in combinations(sorted(K), 2):
        if (a, b) in arcset(d) or (b, a) in arcset(d):
            continue
        for nodes in trails_brute(d, a, b):
            if any(v in K for v in nodes[1:-1]):
                continue
            if not converging_nodes(d, nodes):
                return False
    return True


def labeled_dags(n):
    """Robinson's recurrence for the number of labelled DAGs."""
    from math import comb

    a = [1]
    for m in range(1, n + 1):
        a.append(sum((-1) ** (k + 1) * comb(m, k) * 2 ** (k * (m - k)) * a[m - k]
                     for k in range(1, m + 1)))
    return a[n]
