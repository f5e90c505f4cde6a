"""Built-in example graphs fig1 … fig4_G2, with the vertex names used in their drawings."""
from __future__ import annotations

from .errors import GraphError
from .graph import Graph

_EDGES: dict[str, list[tuple[str, str]]] = {
    # graph with several local maximum stable sets
    "fig1": [("a", "b"), ("b", "c"), ("c", "d"), ("d", "e"), ("b", "f"),
             ("c", "g"), ("g", "h"), ("h", "e")],
    # 4-cycle x-b-y-c; {b,c,d} is local maximum but has no chain
    "fig2_G1": [("a", "x"), ("x", "c"), ("c", "z"), ("z", "d"), ("x", "b"),
                ("b", "y"), ("c", "y")],
    # triangle p2-t1-p3
    "fig2_G2": [("p1", "p2"), ("p2", "p3"), ("p3", "p4"), ("t1", "t2"),
                ("p2", "t1"), ("t1", "p3"), ("p3", "t3")],
    # bipartite, 4-cycle d-e-g-f; {a,d,g} has no chain
    "fig3": [("a", "b"), ("b", "d"), ("d", "f"), ("c", "e"), ("e", "g"),
             ("d", "e"), ("f", "g")],
    # 5-cycle w2-v-w3-u-w4
    "fig4_G1": [("w1", "w2"), ("w2", "v"), ("v", "w3"), ("w2", "w4"),
                ("w4", "u"), ("u", "w3")],
    # 5-cycle b1-b2-b3-t3-t2
    "fig4_G2": [("b1", "b2"), ("b2", "b3"), ("b3", "b4"), ("t1", "t2"),
                ("t2", "t3"), ("t3", "t4"), ("b1", "t2"), ("b3", "t3")],
}

NAMES = tuple(_EDGES)


def corpus(name: str) -> Graph:
    try:
        edges = _EDGES[name]
    except KeyError:
        raise GraphError(f"unknown corpus graph {name!r}; choose from {', '.join(NAMES)}") from None
    return Graph((), edges)
