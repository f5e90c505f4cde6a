"""Pure-Python bitmask kernels.

Every function takes ``adj``, a sequence of adjacency bitmasks indexed by
vertex, and works on vertex subsets encoded as Python ints. ``_speedups``
mirrors this module function for function; :mod:`psigreedoid.kernels`
picks one at import time.
"""
from __future__ import annotations

from collections.abc import Sequence

BACKEND = "python"


def _alpha(adj: Sequence[int], mask: int) -> int:
    count = 0
    while mask:
        m = mask
        maxd = -1
        maxv = -1
        reduced = False
        while m:
            low = m & -m
            v = low.bit_length() - 1
            m ^= low
            d = (adj[v] & mask).bit_count()
            if d <= 1:
                # a vertex of degree <= 1 lies in some maximum stable set
                count += 1
                mask &= ~(low | adj[v])
                reduced = True
                break
            if d > maxd:
                maxd = d
                maxv = v
        if reduced:
            continue
        bit = 1 << maxv
        without = _alpha(adj, mask & ~bit)
        with_v = 1 + _alpha(adj, mask & ~(bit | adj[maxv]))
        return count + (without if without > with_v else with_v)
    return count


def alpha(adj: Sequence[int], mask: int) -> int:
    """Stability number of the subgraph induced by ``mask``."""
    return _alpha(adj, mask)


def is_stable(adj: Sequence[int], s: int) -> bool:
    m = s
    while m:
        low = m & -m
        if adj[low.bit_length() - 1] & s:
            return False
        m ^= low
    return True


def closed_nbhd(adj: Sequence[int], s: int) -> int:
    out = s
    m = s
    while m:
        low = m & -m
        out |= adj[low.bit_length() - 1]
        m ^= low
    return out


def is_local_max(adj: Sequence[int], s: int) -> bool:
    if not is_stable(adj, s):
        return False
    return _alpha(adj, closed_nbhd(adj, s)) == s.bit_count()


def stable_masks(adj: Sequence[int]) -> list[int]:
    """All nonempty stable sets, in depth-first order."""
    out: list[int] = []

    def rec(s: int, cand: int) -> None:
        while cand:
            low = cand & -cand
            cand ^= low
            s2 = s | low
            out.append(s2)
            rec(s2, cand & ~adj[low.bit_length() - 1])

    rec(0, (1 << len(adj)) - 1)
    return out


def psi_masks(adj: Sequence[int]) -> list[int]:
    """All nonempty local maximum stable sets, in depth-first order."""
    out: list[int] = []

    def rec(s: int, cand: int, nb: int) -> None:
        while cand:
            low = cand & -cand
            cand ^= low
            v = low.bit_length() - 1
            s2 = s | low
            nb2 = nb | low | adj[v]
            if _alpha(adj, nb2) == s2.bit_count():
                out.append(s2)
            rec(s2, cand & ~adj[v], nb2)

    rec(0, (1 << len(adj)) - 1, 0)
    return out


def max_stable_masks(adj: Sequence[int], mask: int) -> list[int]:
    """All maximum stable sets of the subgraph induced by ``mask``."""
    target = _alpha(adj, mask)
    out: list[int] = []
    if target == 0:
        return [0]

    def rec(s: int, size: int, cand: int) -> None:
        if size == target:
            out.append(s)
            return
        while cand:
            if size + _alpha(adj, cand) < target:
                return
            low = cand & -cand
            cand ^= low
            rec(s | low, size + 1, cand & ~adj[low.bit_length() - 1])

    rec(0, 0, mask)
    return out


def matching_number(adj: Sequence[int], mask: int) -> int:
    memo: dict[int, int] = {}

    def mm(m: int) -> int:
        if m in memo:
            return memo[m]
        if (m & (m - 1)) == 0:
            return 0
        low = m & -m
        v = low.bit_length() - 1
        rest = m ^ low
        best = mm(rest)
        cap = m.bit_count() // 2
        nbrs = adj[v] & rest
        while nbrs and best < cap:
            lw = nbrs & -nbrs
            nbrs ^= lw
            cand = 1 + mm(rest ^ lw)
            if cand > best:
                best = cand
        memo[m] = best
        return best

    return mm(mask)


def maximum_matching_pairs(adj: Sequence[int], mask: int) -> list[list[tuple[int, int]]]:
    """All maximum matchings of the subgraph induced by ``mask`` as index pairs."""
    target = matching_number(adj, mask)
    out: list[list[tuple[int, int]]] = []
    memo: dict[int, int] = {}

    def bound(m: int) -> int:
        if m not in memo:
            memo[m] = matching_number(adj, m)
        return memo[m]

    def rec(m: int, pairs: list[tuple[int, int]]) -> None:
        if len(pairs) == target:
            out.append(list(pairs))
            return
        if len(pairs) + bound(m) < target:
            return
        low = m & -m
        v = low.bit_length() - 1
        rest = m ^ low
        nbrs = adj[v] & rest
        while nbrs:
            lw = nbrs & -nbrs
            nbrs ^= lw
            pairs.append((v, lw.bit_length() - 1))
            rec(rest ^ lw, pairs)
            pairs.pop()
        rec(rest, pairs)

    rec(mask, [])
    return out


def count_perfect_matchings(adj: Sequence[int], mask: int) -> int:
    memo: dict[int, int] = {0: 1}

    def count(m: int) -> int:
        if m in memo:
            return memo[m]
        low = m & -m
        rest = m ^ low
        total = 0
        nbrs = adj[low.bit_length() - 1] & rest
        while nbrs:
            lw = nbrs & -nbrs
            nbrs ^= lw
            total += count(rest ^ lw)
        memo[m] = total
        return total

    return count(mask)


def accessibility_violation(masks: Sequence[int]) -> int:
    """Index of the first member with no removable element, or -1."""
    members = set(masks)
    for i, x in enumerate(masks):
        m = x
        ok = False
        while m:
            low = m & -m
            m ^= low
            rest = x ^ low
            if rest == 0 or rest in members:
                ok = True
                break
        if not ok:
            return i
    return -1


def exchange_violation(masks: Sequence[int]) -> tuple[int, int] | None:
    """First ``(i, j)`` with ``|X| = |Y| + 1`` and no augmenting element.

    ``X = masks[i]`` is scanned in the outer loop, ``Y = masks[j]`` in the
    inner one, both in the order given.
    """
    members = set(masks)
    by_size: dict[int, list[int]] = {}
    for j, y in enumerate(masks):
        by_size.setdefault(y.bit_count(), []).append(j)
    for i, x in enumerate(masks):
        for j in by_size.get(x.bit_count() - 1, ()):
            y = masks[j]
            d = x & ~y
            ok = False
            while d:
                low = d & -d
                d ^= low
                if (y | low) in members:
                    ok = True
                    break
            if not ok:
                return i, j
    return None
