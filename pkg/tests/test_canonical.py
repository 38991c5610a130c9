# tests/test_canonical.py
import networkx as nx

from conftest import random_graph, to_networkx
from isetverify.graphs.canonical import (
    CanonicalForm,
    canonical_form,
    canonical_graph,
    canonical_labeling,
    is_isomorphic,
    refine_colors,
)
from isetverify.graphs.constructions import complete_bipartite, cycle, disjoint_union, k_prime, path


def test_form_is_invariant_under_relabeling(rng):
    for _ in range(1000):
        n = rng.randint(1, 9)
        g = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == canonical_form(g)


def test_agrees_with_networkx_isomorphism(rng):
    for _ in range(300):
        n = rng.randint(2, 8)
        g, h = random_graph(rng, n), random_graph(rng, n)
        assert is_isomorphic(g, h) == nx.is_isomorphic(to_networkx(g), to_networkx(h))


def test_regular_graphs_that_refinement_cannot_split():
    # C6 and two triangles: both 2-regular, same refinement, not isomorphic
    two_triangles = disjoint_union(cycle(3), cycle(3))
    assert refine_colors(cycle(6)) == refine_colors(two_triangles)
    assert not is_isomorphic(cycle(6), two_triangles)


def test_canonical_graph_is_a_fixed_point(rng):
    for _ in range(100):
        g = random_graph(rng, rng.randint(1, 8))
        c = canonical_graph(g)
        assert is_isomorphic(c, g)
        assert canonical_graph(c) == c


def test_labeling_maps_positions_to_vertices(rng):
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 8))
        form, order = canonical_labeling(g)
        c = form.to_graph()
        assert sorted(order) == list(range(g.n))
        for i in range(g.n):
            for j in range(i + 1, g.n):
                assert c.has_edge(i, j) == g.has_edge(order[i], order[j])


def test_known_forms():
    assert canonical_form(complete_bipartite(2, 3)).graph6() == "DFw"
    assert canonical_form(k_prime(5)).graph6() == "DF{"
    assert canonical_form(path(1)) == CanonicalForm(1, 0)


def test_forms_order_by_vertex_count_then_word():
    assert CanonicalForm(3, 7) < CanonicalForm(4, 0)
    assert CanonicalForm(4, 1) < CanonicalForm(4, 2)
