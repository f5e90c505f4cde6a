import pytest

from psigreedoid.errors import GraphError
from psigreedoid.generators import (
    GeneratorSpec,
    generate_random_unicycle,
    labels_for,
    mix64,
    random_bipartite,
    random_graph,
)
from psigreedoid.graph import components, cycle_rank, is_bipartite, is_forest, unique_cycle


def test_mix64_reference_values():
    # first outputs of the splitmix64 stream seeded with 0
    assert mix64(0, 0) == 0xE220A8397B1DCDAF
    assert mix64(0, 1) == 0x6E789E6AA1B965F4
    assert mix64(0, 2) == 0x06C45D188009454F
    assert mix64(2**64 - 1, 0) < 2**64


@pytest.mark.parametrize("seed", range(5))
def test_triangle_is_forced(seed):
    g = generate_random_unicycle(GeneratorSpec(3, 3, seed=seed))
    assert g.edges == (("v00", "v01"), ("v00", "v02"), ("v01", "v02"))


def test_forest():
    assert is_forest(generate_random_unicycle(GeneratorSpec(10, seed=9)))
    assert len(components(generate_random_unicycle(GeneratorSpec(10, seed=9)))) == 1


def test_deterministic_and_exact_cycle():
    a = generate_random_unicycle(GeneratorSpec(12, 5, seed=42))
    b = generate_random_unicycle(GeneratorSpec(12, 5, seed=42))
    assert a == b and a.vertices == b.vertices
    assert unique_cycle(a).length == 5


def test_every_length_and_size():
    for n in range(3, 15):
        for k in range(3, n + 1):
            g = generate_random_unicycle(GeneratorSpec(n, k, seed=n * 31 + k))
            assert g.order == n and unique_cycle(g).length == k
            assert len(components(g)) == 1


def test_disconnected_instances():
    graphs = [generate_random_unicycle(GeneratorSpec(12, 4, seed=s, connected=False)) for s in range(30)]
    assert all(cycle_rank(g) == 1 and unique_cycle(g).length == 4 for g in graphs)
    assert any(len(components(g)) > 1 for g in graphs)


@pytest.mark.parametrize(
    "kwargs",
    [dict(vertex_count=4, cycle_length=5), dict(vertex_count=4, cycle_length=2),
     dict(vertex_count=6, cycle_length=4, parity="odd"), dict(vertex_count=6, parity="even"),
     dict(vertex_count=6, parity="weird"), dict(vertex_count=-1), dict(vertex_count=3, seed=-1)],
)
def test_invalid_specs(kwargs):
    with pytest.raises(GraphError):
        GeneratorSpec(**kwargs)


def test_parity_accepted_when_consistent():
    GeneratorSpec(6, 3, "three")
    GeneratorSpec(6, 6, "even")
    GeneratorSpec(6, 5, "odd")


def test_labels_sort_numerically():
    names = labels_for(120)
    assert names == sorted(names) and names[0] == "v000"


def test_random_graph_helpers():
    assert random_graph(6, 0.5, 3) == random_graph(6, 0.5, 3)
    assert random_graph(5, 1.0, 0).size == 10
    assert is_bipartite(random_bipartite(4, 5, 0.7, 1))
