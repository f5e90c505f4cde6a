"""Matchings: mu(G), maximum matchings, uniquely restricted matchings, König-Egerváry test.

Uniqueness of restriction is decided two ways. :func:`is_uniquely_restricted`
searches for an alternating cycle; :func:`is_uniquely_restricted_oracle`
counts perfect matchings of the saturated subgraph. The two must agree.
"""
from __future__ import annotations

from collections.abc import Iterable

from . import kernels
from .errors import GraphError
from .graph import Graph, guard
from .stability import stability_number

Edge = tuple[str, str]
Matching = frozenset  # frozenset[Edge], each pair sorted


def make_matching(g: Graph, pairs: Iterable[Iterable[str]]) -> frozenset[Edge]:
    """Normalize ``pairs`` into a matching of ``g``, validating it."""
    out: set[Edge] = set()
    used: set[str] = set()
    for pair in pairs:
        u, w = sorted(pair)
        if not g.has_edge(u, w):
            raise GraphError(f"{u}-{w} is not an edge")
        if u in used or w in used:
            raise GraphError(f"edges share a vertex at {u}-{w}")
        used.update((u, w))
        out.add((u, w))
    return frozenset(out)


def matching_key(m: Iterable[Edge]) -> tuple[Edge, ...]:
    return tuple(sorted(m))


def matching_to_json(m: Iterable[Edge]) -> list[list[str]]:
    return [list(e) for e in matching_key(m)]


def saturated(m: Iterable[Edge]) -> frozenset[str]:
    return frozenset(v for e in m for v in e)


def matching_number(g: Graph) -> int:
    guard(g)
    return kernels.matching_number(g.adjacency_masks, (1 << g.order) - 1)


def maximum_matchings(g: Graph) -> list[frozenset[Edge]]:
    """Every maximum matching, sorted by their sorted edge lists."""
    guard(g)
    labels = g.labels
    raw = kernels.maximum_matching_pairs(g.adjacency_masks, (1 << g.order) - 1)
    out = [frozenset((labels[i], labels[j]) for i, j in pairs) for pairs in raw]
    return sorted(out, key=matching_key)


def find_alternating_cycle(g: Graph, m: Iterable[Iterable[str]]) -> list[str] | None:
    """Return an M-alternating cycle as a vertex list, or None.

    The cycle starts with a matched edge ``c[0]-c[1]`` and alternates from
    there; consecutive pairs (wrapping around) are its edges. For every
    matched edge, in canonical order, a depth-first search follows
    unmatched-then-matched steps through edges not earlier in that order,
    so each cycle is found from its least matched edge.
    """
    m = make_matching(g, m)
    order = sorted(m)
    rank = {e: i for i, e in enumerate(order)}
    mate: dict[str, str] = {}
    for u, w in order:
        mate[u] = w
        mate[w] = u

    def edge_rank(v: str) -> int:
        return rank[tuple(sorted((v, mate[v])))]  # type: ignore[index]

    for i, (a, b) in enumerate(order):
        path = [a, b]
        on_path = {a, b}
        # stack of iterators over unmatched continuations from path[-1]
        stack = [iter(sorted(g.neighbors(b)))]
        while stack:
            cur = path[-1]
            advanced = False
            for d in stack[-1]:
                if d == mate.get(cur) or d not in mate:
                    continue
                if d == a and len(path) >= 4:
                    return list(path)
                if d in on_path or edge_rank(d) < i:
                    continue
                e = mate[d]
                path += [d, e]
                on_path.update((d, e))
                stack.append(iter(sorted(g.neighbors(e))))
                advanced = True
                break
            if not advanced:
                stack.pop()
                if len(path) > 2:
                    on_path.difference_update(path[-2:])
                    del path[-2:]
    return None


def is_uniquely_restricted(g: Graph, m: Iterable[Iterable[str]]) -> bool:
    return find_alternating_cycle(g, m) is None


def is_uniquely_restricted_oracle(g: Graph, m: Iterable[Iterable[str]]) -> bool:
    """Brute force: M is the only perfect matching of G[V(M)]."""
    m = make_matching(g, m)
    sat = saturated(m)
    guard(g)
    return kernels.count_perfect_matchings(g.adjacency_masks, g.mask(sat)) == 1


def all_max_matchings_ur(
    g: Graph, exhaustive: bool = False
) -> tuple[bool, frozenset[Edge] | list[frozenset[Edge]] | None]:
    """Check that every maximum matching is uniquely restricted.

    Returns ``(ok, witness)``: the first failing matching in canonical
    order, or with ``exhaustive=True`` the list of all failing ones.
    """
    failures = []
    for mm in maximum_matchings(g):
        if not is_uniquely_restricted(g, mm):
            if not exhaustive:
                return False, mm
            failures.append(mm)
    if exhaustive:
        return not failures, failures
    return True, None


def is_konig_egervary(g: Graph) -> bool:
    return stability_number(g) + matching_number(g) == g.order
