"""Stable sets: alpha(G), the maximum stable sets, and local maximum stable sets."""
from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from functools import cached_property

from . import kernels
from .errors import GraphError
from .graph import Graph, closed_neighborhood, guard, induced_subgraph


def set_key(s: Iterable[str]) -> tuple[int, tuple[str, ...]]:
    """Canonical order on vertex sets: by size, then lexicographically."""
    t = tuple(sorted(s))
    return (len(t), t)


@dataclass(frozen=True)
class SetFamily:
    """A finite family of vertex sets over a host graph, canonically ordered."""

    ground: Graph
    sets: tuple[frozenset[str], ...]

    @classmethod
    def of(cls, ground: Graph, sets: Iterable[Iterable[str]]) -> SetFamily:
        uniq = {frozenset(s) for s in sets}
        return cls(ground, tuple(sorted(uniq, key=set_key)))

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self) -> Iterator[frozenset[str]]:
        return iter(self.sets)

    def __contains__(self, s: object) -> bool:
        return frozenset(s) in self._members  # type: ignore[arg-type]

    @cached_property
    def _members(self) -> frozenset[frozenset[str]]:
        return frozenset(self.sets)

    def masks(self) -> list[int]:
        return [self.ground.mask(s) for s in self.sets]

    def to_json(self) -> list[list[str]]:
        return [sorted(s) for s in self.sets]


def _family_from_masks(g: Graph, masks: Iterable[int]) -> SetFamily:
    return SetFamily.of(g, (g.unmask(m) for m in masks))


def is_stable(g: Graph, s: Iterable[str]) -> bool:
    s = g.check_subset(s)
    return kernels.is_stable(g.adjacency_masks, g.mask(s))


def stability_number(g: Graph) -> int:
    guard(g)
    return kernels.alpha(g.adjacency_masks, (1 << g.order) - 1)


def maximum_stable_sets(g: Graph) -> SetFamily:
    guard(g)
    return _family_from_masks(g, kernels.max_stable_masks(g.adjacency_masks, (1 << g.order) - 1))


def is_local_max_stable(g: Graph, s: Iterable[str]) -> bool:
    """True iff ``s`` is a maximum stable set of the subgraph induced by N[s].

    The empty set is reported as False; families treat it separately.
    """
    s = g.check_subset(s)
    if not s:
        return False
    return kernels.is_local_max(g.adjacency_masks, g.mask(s))


def enumerate_psi(g: Graph) -> SetFamily:
    """All nonempty local maximum stable sets of ``g``."""
    guard(g, "enumeration")
    return _family_from_masks(g, kernels.psi_masks(g.adjacency_masks))


def enumerate_stable(g: Graph) -> SetFamily:
    guard(g, "enumeration")
    return _family_from_masks(g, kernels.stable_masks(g.adjacency_masks))


def extends_to_maximum(g: Graph, s: Iterable[str]) -> bool:
    """Whether the local maximum stable set ``s`` lies inside some maximum stable set."""
    s = g.check_subset(s)
    if s and not is_local_max_stable(g, s):
        raise GraphError(f"{sorted(s)} is not a local maximum stable set")
    return any(s <= m for m in maximum_stable_sets(g))


def neighborhood_subgraph(g: Graph, s: Iterable[str]) -> Graph:
    """G[N[s]], the subgraph induced by the closed neighborhood."""
    return induced_subgraph(g, closed_neighborhood(g, s))
