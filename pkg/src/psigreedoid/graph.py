"""Simple undirected graphs with string labels, structural predicates and I/O.

Vertices carry two orders: the insertion order (first appearance in the
input, used for serialization) and the canonical lexicographic order. Bit
``i`` of every vertex mask refers to the ``i``-th label in canonical order,
so comparing sorted index tuples is the same as comparing sorted labels.
"""
from __future__ import annotations

import contextlib
import contextvars
import json
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .errors import ForestError, GraphError, NotUnicycleError, ParseError, SizeLimitError

VertexSet = frozenset  # frozenset[str]

DEFAULT_STRUCTURAL_LIMIT = 24
DEFAULT_ENUMERATION_LIMIT = 14

_limits: contextvars.ContextVar[tuple[int, int]] = contextvars.ContextVar(
    "psigreedoid_limits", default=(DEFAULT_STRUCTURAL_LIMIT, DEFAULT_ENUMERATION_LIMIT)
)


def current_limits() -> tuple[int, int]:
    """Return ``(structural, enumeration)`` vertex limits in force."""
    return _limits.get()


@contextlib.contextmanager
def size_limits(structural: int | None = None, enumeration: int | None = None) -> Iterator[None]:
    """Temporarily override the size guards for the current context."""
    s, e = _limits.get()
    token = _limits.set((structural if structural is not None else s,
                         enumeration if enumeration is not None else e))
    try:
        yield
    finally:
        _limits.reset(token)


def guard(g: Graph, kind: str = "structural") -> None:
    structural, enumeration = _limits.get()
    limit = enumeration if kind == "enumeration" else structural
    if g.order > limit:
        raise SizeLimitError(
            f"graph has {g.order} vertices; {kind} operations are limited to {limit}"
        )


def _valid_label(label: object) -> bool:
    return isinstance(label, str) and label != "" and not any(ch.isspace() for ch in label)


class Graph:
    """Immutable simple undirected graph."""

    __slots__ = ("_vertices", "_adj", "_labels", "_index", "_masks", "_edges")

    def __init__(self, vertices: Iterable[str] = (), edges: Iterable[tuple[str, str]] = ()):
        order: dict[str, None] = {}
        for v in vertices:
            if not _valid_label(v):
                raise GraphError(f"invalid vertex label {v!r}")
            order[v] = None
        adj: dict[str, set[str]] = {v: set() for v in order}
        for edge in edges:
            u, w = edge
            for x in (u, w):
                if not _valid_label(x):
                    raise GraphError(f"invalid vertex label {x!r}")
                if x not in adj:
                    order[x] = None
                    adj[x] = set()
            if u == w:
                raise GraphError(f"self-loop at {u!r}")
            if w in adj[u]:
                raise GraphError(f"duplicate edge {u}-{w}")
            adj[u].add(w)
            adj[w].add(u)
        self._vertices = tuple(order)
        self._adj = {v: frozenset(ns) for v, ns in adj.items()}
        self._labels = tuple(sorted(self._vertices))
        self._index = {v: i for i, v in enumerate(self._labels)}
        masks = []
        for v in self._labels:
            m = 0
            for w in self._adj[v]:
                m |= 1 << self._index[w]
            masks.append(m)
        self._masks = tuple(masks)
        self._edges = tuple(sorted(
            (u, w) for u in self._labels for w in self._adj[u] if u < w
        ))

    # -- basic accessors -------------------------------------------------
    @property
    def vertices(self) -> tuple[str, ...]:
        """Vertices in first-appearance order."""
        return self._vertices

    @property
    def labels(self) -> tuple[str, ...]:
        """Vertices in canonical (lexicographic) order."""
        return self._labels

    @property
    def edges(self) -> tuple[tuple[str, str], ...]:
        """Edges as ``(u, w)`` with ``u < w``, sorted."""
        return self._edges

    @property
    def order(self) -> int:
        return len(self._vertices)

    @property
    def size(self) -> int:
        return len(self._edges)

    @property
    def adjacency_masks(self) -> tuple[int, ...]:
        return self._masks

    def neighbors(self, v: str) -> frozenset[str]:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"vertex {v!r} not in graph") from None

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: str, w: str) -> bool:
        return w in self._adj.get(u, ())

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._vertices)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._labels == other._labels and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((self._labels, self._edges))

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size})"

    # -- mask conversion -------------------------------------------------
    def mask(self, s: Iterable[str]) -> int:
        m = 0
        for v in s:
            try:
                m |= 1 << self._index[v]
            except KeyError:
                raise GraphError(f"vertex {v!r} not in graph") from None
        return m

    def unmask(self, m: int) -> frozenset[str]:
        out = []
        i = 0
        while m:
            if m & 1:
                out.append(self._labels[i])
            m >>= 1
            i += 1
        return frozenset(out)

    def check_subset(self, s: Iterable[str]) -> frozenset[str]:
        s = frozenset(s)
        missing = s - self._adj.keys()
        if missing:
            raise GraphError(f"vertices not in graph: {sorted(missing)}")
        return s


# -- neighborhoods and subgraphs ---------------------------------------------

def neighborhood(g: Graph, s: Iterable[str]) -> frozenset[str]:
    """Open neighborhood N(S): vertices outside S adjacent to some member."""
    s = g.check_subset(s)
    out: set[str] = set()
    for v in s:
        out |= g.neighbors(v)
    return frozenset(out - s)


def closed_neighborhood(g: Graph, s: Iterable[str]) -> frozenset[str]:
    s = g.check_subset(s)
    return s | neighborhood(g, s)


def induced_subgraph(g: Graph, s: Iterable[str]) -> Graph:
    s = g.check_subset(s)
    verts = [v for v in g.vertices if v in s]
    return Graph(verts, [(u, w) for u, w in g.edges if u in s and w in s])


def remove_vertices(g: Graph, s: Iterable[str]) -> Graph:
    s = g.check_subset(s)
    return induced_subgraph(g, [v for v in g.vertices if v not in s])


def components(g: Graph) -> list[frozenset[str]]:
    """Connected components, ordered by their least vertex."""
    seen: set[str] = set()
    out = []
    for root in g.labels:
        if root in seen:
            continue
        comp = {root}
        stack = [root]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        out.append(frozenset(comp))
    return out


# -- predicates ---------------------------------------------------------------

def is_forest(g: Graph) -> bool:
    return g.size == g.order - len(components(g))


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def two_coloring(g: Graph) -> dict[str, int] | None:
    color: dict[str, int] = {}
    for root in g.vertices:
        if root in color:
            continue
        color[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for w in g.neighbors(v):
                if w not in color:
                    color[w] = 1 - color[v]
                    stack.append(w)
                elif color[w] == color[v]:
                    return None
    return color


def is_triangle_free(g: Graph) -> bool:
    return all(not (g.neighbors(u) & g.neighbors(w)) for u, w in g.edges)


def is_complete(g: Graph) -> bool:
    n = g.order
    return g.size == n * (n - 1) // 2


def pendant_vertices(g: Graph) -> frozenset[str]:
    return frozenset(v for v in g.vertices if g.degree(v) == 1)


def is_simplicial(g: Graph, v: str) -> bool:
    ns = sorted(g.neighbors(v))
    return all(g.has_edge(a, b) for i, a in enumerate(ns) for b in ns[i + 1:])


def simplicial_vertices(g: Graph) -> frozenset[str]:
    return frozenset(v for v in g.vertices if is_simplicial(g, v))


# -- the unique cycle ---------------------------------------------------------

@dataclass(frozen=True)
class CycleInfo:
    vertices: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def parity(self) -> str:
        k = self.length
        if k == 3:
            return "three"
        return "even" if k % 2 == 0 else "odd"

    def edges(self) -> list[tuple[str, str]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]


def cycle_rank(g: Graph) -> int:
    """Number of independent cycles, |E| - |V| + #components."""
    return g.size - g.order + len(components(g))


def is_unicycle(g: Graph) -> bool:
    return cycle_rank(g) == 1


def unique_cycle(g: Graph) -> CycleInfo:
    """Return the only cycle of ``g``, canonically rotated.

    The cycle starts at its lexicographically least vertex and continues
    toward that vertex's smaller cycle-neighbor.
    """
    rank = cycle_rank(g)
    if rank == 0:
        raise ForestError("graph is a forest")
    if rank > 1:
        raise NotUnicycleError(f"graph has cycle rank {rank}")
    deg = {v: g.degree(v) for v in g.vertices}
    alive = set(g.vertices)
    leaves = [v for v in g.vertices if deg[v] <= 1]
    while leaves:
        v = leaves.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for w in g.neighbors(v):
            if w in alive:
                deg[w] -= 1
                if deg[w] == 1:
                    leaves.append(w)
    # every surviving vertex has exactly two surviving neighbors
    start = min(alive)
    nxt = min(w for w in g.neighbors(start) if w in alive)
    cyc = [start]
    prev, cur = start, nxt
    while cur != start:
        cyc.append(cur)
        step = [w for w in g.neighbors(cur) if w in alive and w != prev]
        prev, cur = cur, step[0]
    return CycleInfo(tuple(cyc))


# -- I/O ----------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    seen_edges: set[frozenset[str]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = line.split()
        if not tokens:
            continue
        if len(tokens) == 1:
            vertices.append(tokens[0])
        elif len(tokens) == 2:
            u, w = tokens
            if u == w:
                raise ParseError(f"self-loop at {u!r}", lineno)
            key = frozenset((u, w))
            if key in seen_edges:
                raise ParseError(f"duplicate edge {u}-{w}", lineno)
            seen_edges.add(key)
            vertices.extend((u, w))
            edges.append((u, w))
        else:
            raise ParseError(f"expected 1 or 2 tokens, got {len(tokens)}", lineno)
    return Graph(vertices, edges)


parse_graph = parse_edge_list


def to_edge_list(g: Graph) -> str:
    """Serialize so that parsing gives back an equal graph (same vertex order)."""
    lines = list(g.vertices)
    lines += [f"{u} {w}" for u, w in g.edges]
    return "\n".join(lines) + "\n"


def to_json(g: Graph) -> dict:
    return {"vertices": list(g.vertices), "edges": [list(e) for e in g.edges]}


def from_json(data: dict | str) -> Graph:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    if not isinstance(data, dict) or "edges" not in data:
        raise ParseError("JSON graph must be an object with 'vertices' and 'edges'")
    edges = []
    for e in data["edges"]:
        if not (isinstance(e, list) and len(e) == 2):
            raise ParseError(f"edge must be a 2-array, got {e!r}")
        edges.append((e[0], e[1]))
    return Graph(data.get("vertices", []), edges)


def to_dot(g: Graph, name: str = "G") -> str:
    def q(label: str) -> str:
        return '"' + label.replace('"', '\\"') + '"'

    lines = [f"graph {q(name)} {{"]
    lines += [f"  {q(v)};" for v in g.vertices]
    lines += [f"  {q(u)} -- {q(w)};" for u, w in g.edges]
    lines.append("}")
    return "\n".join(lines) + "\n"
