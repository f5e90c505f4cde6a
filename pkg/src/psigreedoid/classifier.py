"""Deciding whether Psi(G) is a greedoid for forests and unicycle graphs.

:func:`classify_unicycle` applies the structural characterization by cycle
length; :func:`brute_force_greedoid` checks the axioms on the enumerated
family. The two never call each other, so :func:`cross_validate` compares
independent answers.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import InvariantViolation, NotUnicycleError
from .graph import Graph, cycle_rank, guard, induced_subgraph, is_bipartite, unique_cycle
from .greedoid import Verdict, Witness, is_greedoid
from .matching import all_max_matchings_ur, is_konig_egervary
from .stability import (
    enumerate_psi,
    is_local_max_stable,
    maximum_stable_sets,
    neighborhood_subgraph,
)


def classify_unicycle(g: Graph) -> Verdict:
    rank = cycle_rank(g)
    if rank > 1:
        raise NotUnicycleError(f"graph has cycle rank {rank}; expected a forest or unicycle graph")
    guard(g, "enumeration")
    psi = enumerate_psi(g)
    if rank == 0:
        return Verdict(True, "forest", None, psi_size=len(psi))
    k = unique_cycle(g).length
    if k == 3:
        return Verdict(True, "k3", 3, psi_size=len(psi))
    if k % 2 == 0:
        if not is_bipartite(g):
            raise InvariantViolation("graph with an even unique cycle is not bipartite")
        ok, bad = all_max_matchings_ur(g)
        if ok:
            return Verdict(True, "even_cycle", k, psi_size=len(psi))
        return Verdict(False, "even_cycle", k, Witness("matching", bad), len(psi))
    ok, bad = all_max_matchings_ur(g)
    if not ok:
        raise InvariantViolation(
            "graph without even cycles has a maximum matching that is not uniquely restricted"
        )
    for s in psi:
        if not is_konig_egervary(neighborhood_subgraph(g, s)):
            return Verdict(False, "odd_cycle", k, Witness("psi_member", s), len(psi))
    return Verdict(True, "odd_cycle", k, psi_size=len(psi))


def brute_force_greedoid(g: Graph) -> Verdict:
    guard(g, "enumeration")
    v = is_greedoid(enumerate_psi(g))
    rank = cycle_rank(g)
    k = unique_cycle(g).length if rank == 1 else None
    return Verdict(v.is_greedoid, "brute_force", k, v.witness, v.psi_size)


def induced_cycles(g: Graph, min_length: int = 4) -> list[tuple[str, ...]]:
    """All chordless cycles of length >= ``min_length``, each listed once.

    Each cycle starts at its least vertex and proceeds toward the smaller of
    that vertex's two cycle neighbors.
    """
    rank = cycle_rank(g)
    if rank == 0:
        return []
    if rank == 1:
        c = unique_cycle(g)
        return [c.vertices] if c.length >= min_length else []
    guard(g, "enumeration")
    out = []
    for start in g.labels:
        stack = [[start, w] for w in sorted(g.neighbors(start)) if w > start]
        while stack:
            path = stack.pop()
            last = path[-1]
            for w in sorted(g.neighbors(last)):
                if w <= start or w in path:
                    continue
                if any(g.has_edge(w, x) for x in path[1:-1]):
                    continue
                if g.has_edge(w, start):
                    if len(path) + 1 >= min_length and path[1] < w:
                        out.append(tuple(path + [w]))
                    continue
                stack.append(path + [w])
    return sorted(out)


def cycle_psi_prefilter(g: Graph) -> tuple[bool, Witness | None]:
    """Look for a maximum stable set of an induced cycle (length >= 4) lying in Psi(G).

    ``(False, witness)`` certifies that Psi(G) is not a greedoid; ``True``
    is inconclusive.
    """
    guard(g)
    for cyc in induced_cycles(g):
        for s in maximum_stable_sets(induced_subgraph(g, cyc)):
            if is_local_max_stable(g, s):
                return False, Witness("prefilter", s)
    return True, None


@dataclass(frozen=True)
class Agreement:
    classifier: Verdict
    oracle: Verdict

    @property
    def agree(self) -> bool:
        return self.classifier.is_greedoid == self.oracle.is_greedoid

    def to_json(self) -> dict:
        return {
            "classifier": self.classifier.to_json(),
            "oracle": self.oracle.to_json(),
            "agree": self.agree,
        }


def cross_validate(g: Graph) -> Agreement:
    return Agreement(classify_unicycle(g), brute_force_greedoid(g))


__all__ = [
    "Agreement",
    "brute_force_greedoid",
    "classify_unicycle",
    "cross_validate",
    "cycle_psi_prefilter",
    "induced_cycles",
]
