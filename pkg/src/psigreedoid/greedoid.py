"""Greedoid axioms on set families and accessibility chains.

The empty set is an implicit member of every family: singletons are
accessible through it and it is never reported.
"""
from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass, field

from . import kernels
from .errors import GraphError, InvariantViolation
from .graph import (
    Graph,
    components,
    induced_subgraph,
    is_forest,
    is_simplicial,
    remove_vertices,
    unique_cycle,
)
from .matching import matching_to_json
from .stability import SetFamily, is_local_max_stable, set_key


@dataclass(frozen=True)
class Witness:
    """Certificate attached to a negative verdict.

    ``kind`` is one of ``accessibility`` (value: the stuck set),
    ``exchange`` (value: the pair ``(X, Y)``), ``matching`` (a maximum
    matching that is not uniquely restricted), ``psi_member`` (a local
    maximum stable set whose closed neighborhood is not König-Egerváry) or
    ``prefilter`` (a maximum stable set of an induced cycle lying in Psi).
    """

    kind: str
    value: object

    def to_json(self) -> dict:
        v = self.value
        if self.kind == "exchange":
            x, y = v  # type: ignore[misc]
            return {"kind": "exchange", "X": sorted(x), "Y": sorted(y)}
        if self.kind == "matching":
            return {"kind": "matching", "matching": matching_to_json(v)}  # type: ignore[arg-type]
        return {"kind": self.kind, "set": sorted(v)}  # type: ignore[call-overload]


@dataclass(frozen=True)
class Verdict:
    is_greedoid: bool
    branch: str
    cycle_length: int | None = None
    witness: Witness | None = None
    psi_size: int = 0

    def __post_init__(self):
        if (self.witness is None) != self.is_greedoid:
            raise InvariantViolation("a witness is required exactly when the verdict is negative")

    def to_json(self) -> dict:
        return {
            "is_greedoid": self.is_greedoid,
            "branch": self.branch,
            "cycle_length": self.cycle_length,
            "witness": self.witness.to_json() if self.witness else None,
            "psi_size": self.psi_size,
        }


@dataclass(frozen=True)
class Chain:
    """Accessibility chain, ascending: ``steps[i]`` has ``i + 1`` elements.

    ``cases`` optionally labels how each step was reached by a builder.
    """

    steps: tuple[frozenset[str], ...]
    cases: tuple[str, ...] = field(default=(), compare=False)

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def order(self) -> list[str]:
        """Vertices in the order they join the chain."""
        out = []
        prev: frozenset[str] = frozenset()
        for s in self.steps:
            (v,) = s - prev
            out.append(v)
            prev = s
        return out

    def to_json(self) -> list[list[str]]:
        return [sorted(s) for s in self.steps]


def chain_problems(g: Graph, chain: Chain, target: Iterable[str] | None = None) -> list[str]:
    """Everything wrong with ``chain`` as an accessibility chain in ``g``."""
    problems = []
    prev: frozenset[str] = frozenset()
    for i, s in enumerate(chain.steps, start=1):
        if len(s) != i or not prev < s:
            problems.append(f"step {i} {sorted(s)} does not extend the previous step by one")
        if not is_local_max_stable(g, s):
            problems.append(f"step {i} {sorted(s)} is not a local maximum stable set")
        prev = s
    if chain.steps:
        (first,) = chain.steps[0] if len(chain.steps[0]) == 1 else (None,)
        if first is not None and not is_simplicial(g, first):
            problems.append(f"first vertex {first} is not simplicial")
    if target is not None and (not chain.steps or chain.steps[-1] != frozenset(target)):
        problems.append("chain does not end at the requested set")
    return problems


def validate_chain(g: Graph, chain: Chain, target: Iterable[str] | None = None) -> Chain:
    problems = chain_problems(g, chain, target)
    if problems:
        raise InvariantViolation("; ".join(problems))
    return chain


# -- axioms -------------------------------------------------------------------

def check_accessibility(f: SetFamily) -> tuple[bool, frozenset[str] | None]:
    """Every nonempty member loses some element and stays in the family.

    The witness is the smallest, then lexicographically least, failing member.
    """
    i = kernels.accessibility_violation(f.masks())
    if i < 0:
        return True, None
    return False, f.sets[i]


def check_exchange(f: SetFamily) -> tuple[bool, tuple[frozenset[str], frozenset[str]] | None]:
    """For members ``|X| = |Y| + 1`` some ``x`` in ``X - Y`` augments ``Y``.

    The witness ``(X, Y)`` is the first failure with ``X`` scanned in
    canonical order and ``Y`` in canonical order within it.
    """
    hit = kernels.exchange_violation(f.masks())
    if hit is None:
        return True, None
    i, j = hit
    return False, (f.sets[i], f.sets[j])


def is_greedoid(f: SetFamily) -> Verdict:
    ok, stuck = check_accessibility(f)
    if not ok:
        return Verdict(False, "brute_force", witness=Witness("accessibility", stuck), psi_size=len(f))
    ok, pair = check_exchange(f)
    if not ok:
        return Verdict(False, "brute_force", witness=Witness("exchange", pair), psi_size=len(f))
    return Verdict(True, "brute_force", psi_size=len(f))


# -- chain search ---------------------------------------------------------------

def _require_psi(g: Graph, s: Iterable[str]) -> frozenset[str]:
    s = g.check_subset(s)
    if not is_local_max_stable(g, s):
        raise GraphError(f"{sorted(s)} is not a local maximum stable set")
    return s


def find_accessibility_chain(g: Graph, s: Iterable[str]) -> Chain | None:
    """Depth-first search over removal orders; None if no chain reaches ``s``."""
    s = _require_psi(g, s)
    adj = g.adjacency_masks
    member: dict[int, bool] = {}
    dead: set[int] = set()

    def in_psi(m: int) -> bool:
        if m not in member:
            member[m] = kernels.is_local_max(adj, m)
        return member[m]

    def descend(m: int) -> list[int] | None:
        if m & (m - 1) == 0:
            return [m]
        if m in dead:
            return None
        rest = m
        while rest:
            low = rest & -rest
            rest ^= low
            sub = m ^ low
            if in_psi(sub):
                found = descend(sub)
                if found is not None:
                    found.append(m)
                    return found
        dead.add(m)
        return None

    found = descend(g.mask(s))
    if found is None:
        return None
    return Chain(tuple(g.unmask(m) for m in found))


def chain_for_forest(g: Graph, s: Iterable[str], host: Graph | None = None) -> Chain:
    """Greedy descent: repeatedly drop the first vertex that keeps the set in Psi.

    With ``host`` given (a supergraph of ``g``), each intermediate set must
    also be a local maximum stable set of the host.
    """
    if not is_forest(g):
        raise GraphError("chain_for_forest needs a forest")
    cur = _require_psi(g, s)
    desc = [cur]
    while len(cur) > 1:
        for v in sorted(cur):
            nxt = cur - {v}
            if is_local_max_stable(g, nxt) and (host is None or is_local_max_stable(host, nxt)):
                cur = nxt
                desc.append(cur)
                break
        else:
            raise InvariantViolation(f"no removable vertex in {sorted(cur)}")
    return Chain(tuple(reversed(desc)), ("forest",) * len(desc))


# -- the triangle construction ------------------------------------------------

@dataclass(frozen=True)
class TriangleDecomposition:
    """Pieces left after deleting the three triangle edges.

    ``attached_trees[x]`` lists the trees hanging off triangle vertex ``x``
    (each joined to ``x`` by one edge); ``remainder`` lists the components
    touching no triangle vertex.
    """

    triangle: tuple[str, str, str]
    attached_trees: dict[str, tuple[frozenset[str], ...]]
    remainder: tuple[frozenset[str], ...]

    def side(self, x: str) -> frozenset[str]:
        """Vertex set of the tree containing ``x`` once triangle edges are gone."""
        out = {x}
        for t in self.attached_trees[x]:
            out |= t
        return frozenset(out)

    def far_side(self, x: str) -> frozenset[str]:
        out: set[str] = set()
        for t in self.attached_trees[x]:
            out |= t
        return frozenset(out)


def decompose_triangle(g: Graph) -> TriangleDecomposition:
    cyc = unique_cycle(g)
    if cyc.length != 3:
        raise GraphError(f"unique cycle has length {cyc.length}, not 3")
    tri = cyc.vertices
    rest = remove_vertices(g, tri)
    attached: dict[str, list[frozenset[str]]] = {x: [] for x in tri}
    remainder = []
    for comp in sorted(components(rest), key=set_key):
        touching = [x for x in tri if g.neighbors(x) & comp]
        if len(touching) > 1:
            raise InvariantViolation("a tree touches two triangle vertices")
        if touching:
            attached[touching[0]].append(comp)
        else:
            remainder.append(comp)
    return TriangleDecomposition(
        tri, {x: tuple(ts) for x, ts in attached.items()}, tuple(remainder)
    )


def _in_psi_or_empty(g: Graph, s: frozenset[str]) -> bool:
    return not s or is_local_max_stable(g, s)


def chain_via_triangle(g: Graph, s: Iterable[str], strict: bool = False) -> Chain:
    """Build an accessibility chain in a graph whose only cycle is a triangle.

    The set is peeled from the top down. While it avoids the triangle the
    peeling is a forest descent in ``G`` minus the triangle. When it holds
    a triangle vertex ``x1``, the part ``S1`` on ``x1``'s tree decides the
    step: if ``S1 - x1`` is still local maximum in that tree, ``x1`` goes
    next; otherwise the first ``v`` of ``S1`` with ``S1 - v`` local maximum
    in that tree goes. The split-side memberships are checked at every step.

    These two rules, taken literally, can leave Psi(G): the forest descent
    may keep a vertex adjacent to the triangle whose closed neighborhood
    grows in ``G``, and dropping ``x1`` may strand a set hanging off the
    other triangle vertices. With ``strict=True`` such a step raises
    :class:`InvariantViolation`. Otherwise the forest descent only accepts
    sets that are local maximum in ``G`` too, and when neither rule yields
    a member of Psi(G) the first vertex whose removal does is taken; those
    steps are labelled ``repair``.
    """
    s = _require_psi(g, s)
    dec = decompose_triangle(g)
    tri = set(dec.triangle)
    forest = remove_vertices(g, dec.triangle)
    cur = s
    desc = [cur]
    cases: list[str] = []

    def take(nxt: frozenset[str], label: str) -> None:
        nonlocal cur
        cur = nxt
        desc.append(cur)
        cases.append(label)

    while len(cur) > 1:
        hit = cur & tri
        if not hit:
            sub = chain_for_forest(forest, cur, host=None if strict else g)
            for step in reversed(sub.steps[:-1]):
                if strict and not is_local_max_stable(g, step):
                    raise InvariantViolation(
                        f"forest step {sorted(step)} is not local maximum in G"
                    )
                take(step, "case1")
            break

        (x1,) = hit
        side1 = dec.side(x1)
        g1 = induced_subgraph(g, side1)
        s1 = cur & side1
        for x in dec.triangle:
            if x == x1:
                continue
            far = dec.far_side(x)
            sx = cur & far
            if sx and not is_local_max_stable(induced_subgraph(g, far), sx):
                raise InvariantViolation(f"restriction {sorted(sx)} not local maximum on {x}'s side")
        if not is_local_max_stable(g1, s1):
            raise InvariantViolation(f"restriction {sorted(s1)} not local maximum on {x1}'s side")

        if _in_psi_or_empty(g1, s1 - {x1}):
            nxt = cur - {x1}
            if is_local_max_stable(g, nxt):
                take(nxt, "case3.1")
                continue
            if strict:
                raise InvariantViolation(f"dropping {x1} from {sorted(cur)} leaves Psi(G)")
        else:
            candidates = [v for v in sorted(s1 - {x1}) if is_local_max_stable(g1, s1 - {v})]
            if not candidates:
                raise InvariantViolation(f"no removable vertex in {sorted(s1)} within its tree")
            chosen = None
            for v in candidates:
                if is_local_max_stable(g, cur - {v}):
                    chosen = v
                    break
                if strict:
                    raise InvariantViolation(f"dropping {v} from {sorted(cur)} leaves Psi(G)")
            if chosen is not None:
                take(cur - {chosen}, "case3.2")
                continue

        for v in sorted(cur):
            if is_local_max_stable(g, cur - {v}):
                take(cur - {v}, "repair")
                break
        else:
            raise InvariantViolation(f"no removable vertex in {sorted(cur)}")

    cases.append("base")
    chain = Chain(tuple(reversed(desc)), tuple(reversed(cases)))
    return validate_chain(g, chain, s)
