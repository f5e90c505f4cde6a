import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import G, sample_graphs, sample_unicycles
from oracles import cycle_rank as naive_rank
from psigreedoid.corpus import NAMES, corpus
from psigreedoid.errors import ForestError, GraphError, NotUnicycleError, ParseError, SizeLimitError
from psigreedoid.graph import (
    Graph,
    closed_neighborhood,
    components,
    cycle_rank,
    from_json,
    guard,
    induced_subgraph,
    is_bipartite,
    is_complete,
    is_forest,
    is_simplicial,
    is_triangle_free,
    neighborhood,
    parse_edge_list,
    pendant_vertices,
    remove_vertices,
    simplicial_vertices,
    size_limits,
    to_dot,
    to_edge_list,
    to_json,
    two_coloring,
    unique_cycle,
)


def test_labels_and_edges_are_canonical():
    g = G("c-a", "b-a", isolated="z")
    assert g.vertices == ("z", "c", "a", "b")
    assert g.labels == ("a", "b", "c", "z")
    assert g.edges == (("a", "b"), ("a", "c"))
    assert g.order == 4 and g.size == 2
    assert g.degree("a") == 2 and g.degree("z") == 0
    assert g.unmask(g.mask({"a", "z"})) == {"a", "z"}


@pytest.mark.parametrize("edges", [[("a", "a")], [("a", "b"), ("b", "a")], [("a b", "c")], [("", "c")]])
def test_rejects_bad_graphs(edges):
    with pytest.raises(GraphError):
        Graph((), edges)


def test_unknown_vertex_in_subset():
    with pytest.raises(GraphError):
        G("a-b").check_subset({"q"})


def test_equality_ignores_declaration_order():
    assert G("a-b", "b-c") == G("c-b", "b-a")
    assert hash(G("a-b")) == hash(G("b-a"))
    assert G("a-b") != G("a-b", isolated="c")


def test_neighborhoods():
    g = corpus("fig1")
    assert neighborhood(g, {"b"}) == {"a", "c", "f"}
    assert closed_neighborhood(g, {"a", "e"}) == {"a", "b", "d", "e", "h"}
    h = induced_subgraph(g, {"a", "b", "c"})
    assert h.edges == (("a", "b"), ("b", "c"))
    assert remove_vertices(g, {"b"}).order == 7


def test_components_sorted():
    g = G("b-a", "d-c", isolated="e")
    assert components(g) == [{"a", "b"}, {"c", "d"}, {"e"}]


def test_structure_predicates():
    tri = G("a-b", "b-c", "a-c")
    assert is_complete(tri) and not is_triangle_free(tri) and not is_bipartite(tri)
    assert is_forest(G("a-b", "b-c"))
    assert two_coloring(G("a-b", "b-c", "c-d", "d-a")) == {"a": 0, "b": 1, "c": 0, "d": 1}
    assert two_coloring(tri) is None
    g = corpus("fig2_G2")
    assert pendant_vertices(g) == {"p1", "p4", "t2", "t3"}
    assert is_simplicial(g, "p1") and not is_simplicial(g, "p2")
    assert simplicial_vertices(g) == {"p1", "p4", "t2", "t3"}


@pytest.mark.parametrize(
    "name, n, m, k",
    [("fig1", 8, 8, 5), ("fig2_G1", 7, 7, 4), ("fig2_G2", 7, 7, 3),
     ("fig3", 7, 7, 4), ("fig4_G1", 6, 6, 5), ("fig4_G2", 8, 8, 5)],
)
def test_corpus_shapes(name, n, m, k):
    g = corpus(name)
    assert (g.order, g.size, unique_cycle(g).length) == (n, m, k)


def test_fig4_g1_is_triangle_free_not_bipartite():
    g = corpus("fig4_G1")
    assert is_triangle_free(g) and not is_bipartite(g)


def test_unknown_corpus_name():
    with pytest.raises(GraphError):
        corpus("fig9")
    assert len(NAMES) == 6


def test_unique_cycle_canonical_rotation():
    c = unique_cycle(G("d-c", "c-b", "b-a", "a-d", "d-x"))
    assert c.vertices == ("a", "b", "c", "d")
    assert c.parity == "even"
    assert unique_cycle(corpus("fig2_G2")).parity == "three"
    assert unique_cycle(corpus("fig1")).parity == "odd"


def test_unique_cycle_errors():
    with pytest.raises(ForestError):
        unique_cycle(G("a-b"))
    with pytest.raises(NotUnicycleError):
        unique_cycle(G("a-b", "b-c", "c-a", "c-d", "d-e", "e-c"))


def test_unique_cycle_in_disconnected_graph():
    g = G("a-b", "b-c", "c-a", "x-y", "y-z")
    assert unique_cycle(g).vertices == ("a", "b", "c")


def test_cycle_rank_matches_union_find():
    for g in sample_graphs(150, 10, seed=1):
        assert cycle_rank(g) == naive_rank(g)


def test_unique_cycle_is_a_real_cycle():
    for g in sample_unicycles(100, 14, seed=2):
        c = unique_cycle(g)
        assert len(set(c.vertices)) == c.length
        assert all(g.has_edge(u, w) for u, w in c.edges())
        # dropping any cycle edge leaves a forest
        u, w = c.edges()[0]
        rest = Graph(g.vertices, [e for e in g.edges if set(e) != {u, w}])
        assert is_forest(rest)


def test_parse_edge_list():
    text = "# header\na b  # trailing\nb c\n\nz\n"
    g = parse_edge_list(text)
    assert g.edges == (("a", "b"), ("b", "c")) and "z" in g


@pytest.mark.parametrize(
    "text, line",
    [("a b\nb a\n", 2), ("a a\n", 1), ("a b c\n", 1), ("x y\n\n# c\np q r\n", 4)],
)
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as info:
        parse_edge_list(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")


def test_json_errors():
    with pytest.raises(ParseError):
        from_json("{not json")
    with pytest.raises(ParseError):
        from_json({"vertices": []})
    with pytest.raises(ParseError):
        from_json({"edges": [["a"]]})
    with pytest.raises(GraphError):
        from_json({"edges": [["a", 3]]})


labels = st.sampled_from([f"v{i}" for i in range(9)])


@st.composite
def graphs(draw):
    verts = draw(st.lists(labels, unique=True, max_size=9))
    pairs = [(u, w) for i, u in enumerate(verts) for w in verts[i + 1:]]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(verts, chosen)


@settings(max_examples=80, deadline=None)
@given(graphs())
def test_round_trips(g):
    back = parse_edge_list(to_edge_list(g))
    assert back == g and back.vertices == g.vertices
    assert from_json(json.dumps(to_json(g))) == g


def test_dot_export():
    dot = to_dot(G("a-b", isolated="c"))
    assert dot.startswith('graph "G" {')
    assert '"a" -- "b";' in dot and '"c";' in dot


def test_size_guards():
    big = Graph([f"v{i}" for i in range(20)])
    guard(big)
    with pytest.raises(SizeLimitError):
        guard(big, "enumeration")
    with size_limits(enumeration=20):
        guard(big, "enumeration")
    with size_limits(structural=5), pytest.raises(SizeLimitError):
        guard(big)
    guard(big)
