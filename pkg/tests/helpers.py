"""Graph builders shared by the test modules."""
from __future__ import annotations

import random

from psigreedoid.generators import GeneratorSpec, generate_random_unicycle, random_graph
from psigreedoid.graph import Graph


def G(*edges: str, isolated: str = "") -> Graph:
    """Graph from 'a-b' strings plus whitespace-separated isolated labels."""
    return Graph(isolated.split(), [tuple(e.split("-")) for e in edges])


def sample_graphs(count: int, max_n: int, seed: int, p_range=(0.15, 0.6)) -> list[Graph]:
    rng = random.Random(seed)
    return [
        random_graph(rng.randint(1, max_n), rng.uniform(*p_range), rng.getrandbits(64))
        for _ in range(count)
    ]


def sample_unicycles(count: int, max_n: int, seed: int, ks=range(3, 9)) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        k = rng.choice([k for k in ks if k <= max_n])
        n = rng.randint(k, max_n)
        out.append(generate_random_unicycle(GeneratorSpec(n, k, seed=rng.getrandbits(64))))
    return out
