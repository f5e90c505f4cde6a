"""Seeded random forests, unicycle graphs and arbitrary graphs.

Unicycle instances are built cycle-first: a k-cycle on randomly chosen
labels, then every remaining vertex hangs off a uniformly chosen earlier
vertex. The cycle length is therefore exact.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import GraphError
from .graph import Graph

MASK64 = (1 << 64) - 1
PARITIES = ("three", "even", "odd", "any")
# probability that a vertex opens a new component when connected=False
NEW_COMPONENT_P = 0.25


def mix64(master: int, index: int) -> int:
    """Per-instance seed: one splitmix64 step over master + (index + 1) * golden gamma."""
    z = (master + (index + 1) * 0x9E3779B97F4A7C15) & MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def labels_for(n: int) -> list[str]:
    width = max(2, len(str(n - 1))) if n else 2
    return [f"v{i:0{width}d}" for i in range(n)]


def _parity_of(k: int) -> str:
    if k == 3:
        return "three"
    return "even" if k % 2 == 0 else "odd"


@dataclass(frozen=True)
class GeneratorSpec:
    vertex_count: int
    cycle_length: int | None = None
    parity: str = "any"
    seed: int = 0
    connected: bool = True

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphError("vertex_count must be non-negative")
        if self.parity not in PARITIES:
            raise GraphError(f"parity must be one of {', '.join(PARITIES)}")
        if not 0 <= self.seed <= MASK64:
            raise GraphError("seed must be an unsigned 64-bit integer")
        k = self.cycle_length
        if k is None:
            if self.parity != "any":
                raise GraphError("a parity constraint needs a cycle length")
            return
        if k < 3:
            raise GraphError("cycle_length must be at least 3")
        if k > self.vertex_count:
            raise GraphError(f"cycle_length {k} exceeds vertex_count {self.vertex_count}")
        if self.parity != "any" and self.parity != _parity_of(k):
            raise GraphError(f"cycle_length {k} is not {self.parity}")


def generate_random_unicycle(spec: GeneratorSpec) -> Graph:
    """Random unicycle graph (or forest when ``cycle_length`` is None)."""
    rng = random.Random(spec.seed)
    n, k = spec.vertex_count, spec.cycle_length or 0
    names = labels_for(n)
    rng.shuffle(names)
    edges = [(names[i], names[(i + 1) % k]) for i in range(k)]
    placed = k
    if not k and n:
        placed = 1
    for i in range(placed, n):
        if not spec.connected and rng.random() < NEW_COMPONENT_P:
            continue
        edges.append((names[rng.randrange(i)], names[i]))
    return Graph(sorted(names), edges)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p) on ``labels_for(n)``."""
    rng = random.Random(seed)
    names = labels_for(n)
    edges = [(names[i], names[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Graph(names, edges)


def random_bipartite(n1: int, n2: int, p: float, seed: int) -> Graph:
    rng = random.Random(seed)
    left = [f"l{i:02d}" for i in range(n1)]
    right = [f"r{i:02d}" for i in range(n2)]
    edges = [(a, b) for a in left for b in right if rng.random() < p]
    return Graph(left + right, edges)
