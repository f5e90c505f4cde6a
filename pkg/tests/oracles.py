"""Definition-level reference implementations, deliberately naive.

Nothing here touches the bitmask kernels: every answer comes from
itertools over explicit vertex subsets and edge subsets.
"""
from __future__ import annotations

from itertools import combinations

from psigreedoid.graph import Graph


def subsets(items):
    items = sorted(items)
    for r in range(len(items) + 1):
        for c in combinations(items, r):
            yield frozenset(c)


def is_stable(g: Graph, s) -> bool:
    return all(not g.has_edge(u, w) for u, w in combinations(sorted(s), 2))


def alpha_of(g: Graph, verts) -> int:
    verts = sorted(verts)
    for r in range(len(verts), -1, -1):
        for c in combinations(verts, r):
            if is_stable(g, c):
                return r
    return 0


def closed_nbhd(g: Graph, s) -> frozenset:
    out = set(s)
    for v in s:
        out |= g.neighbors(v)
    return frozenset(out)


def maximum_stable(g: Graph) -> set[frozenset]:
    a = alpha_of(g, g.labels)
    return {s for s in subsets(g.labels) if len(s) == a and is_stable(g, s)}


def psi(g: Graph) -> set[frozenset]:
    return {
        s
        for s in subsets(g.labels)
        if s and is_stable(g, s) and alpha_of(g, closed_nbhd(g, s)) == len(s)
    }


def matchings(g: Graph) -> list[frozenset]:
    """Every matching, including the empty one."""
    out = []

    def rec(i, used, cur):
        if i == len(g.edges):
            out.append(frozenset(cur))
            return
        rec(i + 1, used, cur)
        u, w = g.edges[i]
        if u not in used and w not in used:
            rec(i + 1, used | {u, w}, cur + [(u, w)])

    rec(0, frozenset(), [])
    return out


def mu(g: Graph) -> int:
    return max(len(m) for m in matchings(g))


def maximum_matchings(g: Graph) -> set[frozenset]:
    k = mu(g)
    return {m for m in matchings(g) if len(m) == k}


def perfect_matching_count(g: Graph, verts) -> int:
    verts = frozenset(verts)
    sub = [e for e in g.edges if e[0] in verts and e[1] in verts]
    count = 0
    for m in matchings(Graph(sorted(verts), sub)):
        if 2 * len(m) == len(verts):
            count += 1
    return count


def is_ur(g: Graph, m) -> bool:
    sat = {v for e in m for v in e}
    return perfect_matching_count(g, sat) == 1


def accessible(family: set[frozenset]) -> bool:
    fam = family | {frozenset()}
    return all(any(x - {v} in fam for v in x) for x in fam if x)


def exchange(family: set[frozenset]) -> bool:
    fam = family | {frozenset()}
    for x in fam:
        for y in fam:
            if len(x) == len(y) + 1 and not any(y | {v} in fam for v in x - y):
                return False
    return True


def is_greedoid(family: set[frozenset]) -> bool:
    return accessible(family) and exchange(family)


def cycle_rank(g: Graph) -> int:
    parent = {v: v for v in g.labels}

    def find(v):
        while parent[v] != v:
            v = parent[v]
        return v

    extra = 0
    for u, w in g.edges:
        a, b = find(u), find(w)
        if a == b:
            extra += 1
        else:
            parent[a] = b
    return extra
