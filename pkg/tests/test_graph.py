# tests/test_graph.py
import pytest

from isetverify.errors import GraphError, PreconditionError
from isetverify.graphs.canonical import is_isomorphic
from isetverify.graphs.constructions import complete_bipartite, cycle, disjoint_union, path
from isetverify.graphs.graph import Graph, from_edge_list, iter_bits, mask_of


def test_iter_bits_and_mask_of():
    assert list(iter_bits(0b101001)) == [0, 3, 5]
    assert mask_of([0, 3, 5]) == 0b101001


@pytest.mark.parametrize("n, edges", [
    (0, []),
    (3, [(0, 0)]),
    (3, [(0, 3)]),
    (65, []),
])
def test_from_edge_list_rejects_bad_input(n, edges):
    with pytest.raises(GraphError):
        from_edge_list(n, edges)


def test_degrees_and_edges():
    g = complete_bipartite(2, 3)
    assert g.degrees() == [3, 3, 2, 2, 2]
    assert g.min_degree() == 2 and g.max_degree() == 3
    assert g.edge_count() == 6
    assert g.edges() == [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]
    assert g.neighbors(2) == frozenset({0, 1})
    assert not g.is_regular()
    assert cycle(5).is_regular()


def test_edits_return_new_graphs():
    g = path(3)
    h = g.add_edge(0, 2)
    assert g.edge_count() == 2
    assert h.edge_count() == 3
    assert h.delete_edge(0, 2) == g


def test_edit_errors():
    g = path(3)
    with pytest.raises(GraphError):
        g.delete_edge(0, 2)
    with pytest.raises(GraphError):
        g.add_edge(0, 1)
    with pytest.raises(GraphError):
        g.add_edge(1, 1)
    with pytest.raises(GraphError):
        g.degree(3)


def test_induced_subgraph_keeps_relative_order():
    g = cycle(5)
    sub = g.induced_subgraph([4, 0, 1])
    assert sub.n == 3
    assert sub.edges() == [(0, 1), (0, 2)]
    assert g.induced_subgraph([]).n == 0


def test_delete_vertex():
    g = complete_bipartite(2, 3).delete_vertex(0)
    assert g.n == 4
    assert g.degrees() == [3, 1, 1, 1]


def test_complement_of_c5_is_c5():
    assert is_isomorphic(cycle(5).complement(), cycle(5))
    assert complete_bipartite(2, 3).complement().edge_count() == 4


def test_relabel_moves_edges():
    g = path(4)
    perm = [2, 0, 3, 1]
    h = g.relabel(perm)
    for u, v in g.edges():
        assert h.has_edge(perm[u], perm[v])
    assert h.edge_count() == g.edge_count()
    with pytest.raises(GraphError):
        g.relabel([0, 0, 1, 2])


def test_components():
    g = disjoint_union(path(2), path(3))
    assert sorted(map(sorted, g.components())) == [[0, 1], [2, 3, 4]]
    assert not g.is_connected()
    assert cycle(6).is_connected()


def test_zero_vertex_graph_queries():
    empty = Graph(0, ())
    with pytest.raises(PreconditionError):
        empty.min_degree()
    with pytest.raises(PreconditionError):
        empty.is_connected()
