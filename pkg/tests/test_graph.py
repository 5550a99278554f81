import itertools

import pytest

from luckylab.graph import (
    GraphError,
    build_graph,
    chromatic_number,
    complete_graph,
    complete_multipartite,
    connected_components,
    cycle_graph,
    empty_graph,
    is_triangle_free,
    max_clique,
    path_graph,
    petersen_graph,
    regularity,
)


def test_build_path():
    g = build_graph(3, [(0, 1), (1, 2)])
    assert g.degrees() == [1, 2, 1]
    assert g.neighbors(1) == (0, 2)


def test_duplicate_edges_collapse():
    g = build_graph(2, [(0, 1), (1, 0)])
    assert g.m == 1


def test_loop_rejected():
    with pytest.raises(GraphError, match=r"\(0, 0\)"):
        build_graph(1, [(0, 0)])


def test_out_of_range_rejected():
    with pytest.raises(GraphError, match=r"\(0, 3\)"):
        build_graph(3, [(0, 3)])


def test_build_is_order_insensitive():
    a = build_graph(4, [(0, 1), (2, 3), (1, 2)])
    b = build_graph(4, [(2, 1), (1, 0), (3, 2), (0, 1)])
    assert a == b


def test_degree_sum_is_twice_edges(rng):
    from conftest import random_graph
    for _ in range(50):
        g = random_graph(rng)
        assert sum(g.degrees()) == 2 * g.m


def test_triangle_free():
    assert is_triangle_free(cycle_graph(5))
    assert not is_triangle_free(complete_graph(3))
    assert is_triangle_free(petersen_graph())


def test_max_clique_small():
    assert max_clique(complete_graph(4))[0] == 4
    size, witness = max_clique(petersen_graph())
    assert size == 2
    # witness is a genuine clique
    assert all(petersen_graph().has_edge(u, v) for u, v in itertools.combinations(witness, 2))


def test_max_clique_matches_enumeration(rng):
    from conftest import random_graph

    def brute(g):
        best = 0
        for r in range(g.n, 0, -1):
            for combo in itertools.combinations(range(g.n), r):
                if all(g.has_edge(u, v) for u, v in itertools.combinations(combo, 2)):
                    return r
        return best

    for _ in range(30):
        g = random_graph(rng, 1, 7)
        assert max_clique(g)[0] == brute(g)


def test_chromatic_number_examples():
    assert chromatic_number(complete_graph(4))[0] == 4
    assert chromatic_number(cycle_graph(5))[0] == 3
    # octahedron: no proper 2-coloring exists (checked by enumeration below)
    octa = complete_multipartite([2, 2, 2])
    chi, witness = chromatic_number(octa)
    assert chi == 3
    for colors in itertools.product((1, 2), repeat=octa.n):
        assert any(colors[u] == colors[v] for u, v in octa.edges)
    assert all(witness[u] != witness[v] for u, v in octa.edges)
    assert len(set(witness.values())) == 3


def test_chromatic_witness_proper(rng):
    from conftest import random_graph
    for _ in range(25):
        g = random_graph(rng, 1, 7)
        chi, witness = chromatic_number(g)
        assert all(witness[u] != witness[v] for u, v in g.edges)
        assert len(set(witness.values())) == chi


def test_clique_at_most_chromatic(rng):
    from conftest import random_graph
    for _ in range(25):
        g = random_graph(rng, 1, 7)
        assert max_clique(g)[0] <= chromatic_number(g)[0]


def test_regularity():
    assert regularity(complete_graph(4)) == 3
    assert regularity(path_graph(3)) is None
    assert regularity(petersen_graph()) == 3
    assert regularity(empty_graph(3)) == 0


def test_components():
    g = build_graph(5, [(0, 1), (3, 4)])
    assert connected_components(g) == [[0, 1], [2], [3, 4]]
