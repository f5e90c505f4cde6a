import pytest

import oracles
from helpers import G, sample_graphs, sample_unicycles
from psigreedoid.corpus import corpus
from psigreedoid.errors import GraphError, SizeLimitError
from psigreedoid.graph import Graph
from psigreedoid.stability import (
    SetFamily,
    enumerate_psi,
    enumerate_stable,
    extends_to_maximum,
    is_local_max_stable,
    is_stable,
    maximum_stable_sets,
    neighborhood_subgraph,
    set_key,
    stability_number,
)


def test_alpha_matches_oracle(backend):
    for g in sample_graphs(80, 10, seed=21):
        assert stability_number(g) == oracles.alpha_of(g, g.labels)


def test_maximum_stable_sets_match_oracle(backend):
    for g in sample_graphs(60, 10, seed=22):
        assert set(maximum_stable_sets(g)) == oracles.maximum_stable(g)


def test_psi_matches_oracle(backend):
    for g in sample_graphs(50, 9, seed=23) + sample_unicycles(30, 10, seed=24):
        assert set(enumerate_psi(g)) == oracles.psi(g)


def test_stable_enumeration_matches_oracle(backend):
    for g in sample_graphs(30, 9, seed=25):
        expected = {s for s in oracles.subsets(g.labels) if s and oracles.is_stable(g, s)}
        assert set(enumerate_stable(g)) == expected


def test_fig1_local_maximum_sets():
    g = corpus("fig1")
    assert is_local_max_stable(g, {"e", "g"})
    assert is_local_max_stable(g, {"a"})  # pendant
    assert not is_local_max_stable(g, {"b"})
    assert not is_local_max_stable(g, {"a", "b"})  # not stable
    assert not any({"b", "d", "h"} <= s for s in maximum_stable_sets(g))
    assert stability_number(g) == 4


def test_empty_set_is_never_reported():
    g = G("a-b")
    assert not is_local_max_stable(g, set())
    assert frozenset() not in enumerate_psi(g)
    assert enumerate_psi(Graph()).sets == ()
    assert maximum_stable_sets(Graph()).sets == (frozenset(),)


def test_family_is_canonically_ordered():
    fam = enumerate_psi(corpus("fig2_G2"))
    keys = [set_key(s) for s in fam]
    assert keys == sorted(keys)
    assert fam.to_json()[0] == ["p1"]
    assert {"p1", "p4"} in fam and {"p2"} not in fam
    again = SetFamily.of(fam.ground, list(reversed(fam.sets)) + [{"p1"}])
    assert again == fam


def test_is_stable_validates_labels():
    with pytest.raises(GraphError):
        is_stable(G("a-b"), {"q"})


def test_nemhauser_trotter_property():
    for g in sample_graphs(60, 10, seed=26):
        assert all(extends_to_maximum(g, s) for s in enumerate_psi(g))


def test_extends_to_maximum_rejects_non_members():
    with pytest.raises(GraphError):
        extends_to_maximum(corpus("fig1"), {"b"})


def test_neighborhood_subgraph():
    h = neighborhood_subgraph(corpus("fig4_G1"), {"u", "v"})
    assert set(h.labels) == {"u", "v", "w2", "w3", "w4"}


def test_enumeration_guard():
    g = Graph([f"v{i:02d}" for i in range(15)])
    with pytest.raises(SizeLimitError):
        enumerate_psi(g)
    assert stability_number(g) == 15
