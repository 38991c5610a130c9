# tests/test_criticality.py
import pytest

from isetverify.errors import PreconditionError
from isetverify.graphs.constructions import complete_bipartite, cycle, pattern_host
from isetverify.graphs.counting import independence_vector
from isetverify.graphs.criticality import (
    criticality,
    decompose_critical_2,
    decomposition_violations,
    degree_partition,
    find_rewire_patterns,
    good_deletion_edges,
    good_deletion_vertices,
    is_critical,
    is_edge_critical,
    is_edge_critical_by_deletion,
    is_valid_pattern,
    is_vertex_critical,
    is_vertex_critical_by_deletion,
    triangle_rewire,
    verify_decomposition,
)
from isetverify.graphs.enumeration import enumerate_classes
from isetverify.graphs.graph import from_edge_list
from isetverify.models.graph_specs import EnumSpec
from isetverify.models.structure import Decomposition2, RewirePattern


def test_k23_is_edge_critical_but_not_vertex_critical():
    report = criticality(complete_bipartite(2, 3), 2)
    assert report.edge_critical
    assert not report.vertex_critical
    assert report.vertex_witness == 2
    assert report.edge_witness is None
    assert not report.critical


def test_cycles_are_critical():
    for k in range(3, 10):
        assert is_critical(cycle(k), 2)


def test_minimum_degree_must_match():
    with pytest.raises(PreconditionError):
        criticality(cycle(5), 3)
    with pytest.raises(PreconditionError):
        criticality(cycle(5), 0)


def test_deletion_lists():
    g = complete_bipartite(2, 3)
    assert good_deletion_vertices(g, 2) == [2, 3, 4]
    assert good_deletion_edges(g, 2) == []
    diamond = complete_bipartite(2, 2).add_edge(0, 1)
    assert good_deletion_edges(diamond, 2) == [(0, 1)]


@pytest.mark.parametrize("n", [4, 5, 6])
def test_degree_and_deletion_definitions_agree(n):
    for delta in range(1, n):
        for g in enumerate_classes(EnumSpec(n=n, min_degree=delta, exact_min_degree=True)):
            assert is_edge_critical(g, delta) == is_edge_critical_by_deletion(g, delta)
            assert is_vertex_critical(g, delta) == is_vertex_critical_by_deletion(g, delta)


def test_degree_partition():
    part = degree_partition(complete_bipartite(2, 3), 2)
    assert part.exactly_delta == [2, 3, 4]
    assert part.above_delta == [0, 1]
    assert (part.h, part.ell) == (2, 3)
    dumped = part.model_dump()
    assert (dumped["h"], dumped["ell"]) == (2, 3)


def test_criticality_report_serialises_the_combined_flag():
    assert criticality(cycle(6), 2).model_dump()["critical"] is True
    dumped = criticality(complete_bipartite(2, 3), 2).model_dump()
    assert dumped["edge_critical"] and not dumped["vertex_critical"]
    assert dumped["critical"] is False


def test_cycle_decomposes_as_cycle():
    d = decompose_critical_2(cycle(7))
    assert d.kind == "cycle"
    assert verify_decomposition(cycle(7), d)


def test_bowtie_splits_with_a_shared_boundary_vertex(bowtie):
    d = decompose_critical_2(bowtie)
    assert d.kind == "path_split"
    assert d.y1 == [1, 2]
    assert d.y2 == [0, 3, 4]
    assert d.v1 == d.v2 == 0
    assert verify_decomposition(bowtie, d)


def test_decomposition_violations_name_the_problem(bowtie):
    wrong = Decomposition2(kind="path_split", y1=[1, 2], y2=[0, 3, 4], v1=0, v2=3)
    problems = decomposition_violations(bowtie, wrong)
    assert any("last path vertex" in p for p in problems)
    assert not verify_decomposition(bowtie, Decomposition2(kind="cycle"))


def test_decompose_rejects_non_critical_input():
    with pytest.raises(PreconditionError):
        decompose_critical_2(complete_bipartite(2, 3))


@pytest.mark.parametrize("n", [5, 6, 7])
def test_every_connected_critical_class_decomposes(n):
    spec = EnumSpec(n=n, min_degree=2, exact_min_degree=True, connected_only=True, critical_only=True)
    for g in enumerate_classes(spec):
        assert verify_decomposition(g, decompose_critical_2(g))


def test_patterns_in_pattern_host():
    g = pattern_host()
    patterns = find_rewire_patterns(g)
    assert RewirePattern(w1=0, v=1, w2=2, w3=3, x=4, y2=5, y3=6) in patterns
    # pairing 2 with 6 is excluded: they are already adjacent
    assert RewirePattern(w1=0, v=1, w2=2, w3=3, x=4, y2=6, y3=5) not in patterns
    assert len(patterns) == 13
    assert patterns == sorted(patterns, key=lambda p: p.vertices())
    assert all(is_valid_pattern(g, p) for p in patterns)


def test_rewiring_keeps_degrees_and_does_not_lower_i3():
    g = pattern_host()
    base = independence_vector(g)[3]
    for p in find_rewire_patterns(g):
        rewired = triangle_rewire(g, p)
        assert rewired.degrees() == g.degrees()
        assert rewired.edge_count() == g.edge_count()
        assert independence_vector(rewired)[3] >= base


def test_rewiring_back_restores_the_graph():
    # hub 0 sees 1, 4, 7, 8; after the move 7-2-5 and 8-3-6 are triangles carrying the inverse move
    g = from_edge_list(9, [
        (0, 1), (0, 4), (0, 7), (0, 8),
        (1, 2), (1, 3), (2, 3),
        (4, 5), (4, 6), (5, 6),
        (7, 2), (7, 5), (8, 3), (8, 6),
    ])
    forward = RewirePattern(w1=0, v=1, w2=2, w3=3, x=4, y2=5, y3=6)
    assert forward in find_rewire_patterns(g)
    rewired = triangle_rewire(g, forward)
    back = RewirePattern(w1=0, v=7, w2=2, w3=5, x=8, y2=3, y3=6)
    assert back in find_rewire_patterns(rewired)
    assert triangle_rewire(rewired, back) == g
    assert sorted(triangle_rewire(rewired, back).edges()) == sorted(g.edges())


def test_rewire_rejects_invalid_pattern():
    g = pattern_host()
    with pytest.raises(PreconditionError):
        triangle_rewire(g, RewirePattern(w1=0, v=1, w2=2, w3=3, x=4, y2=6, y3=5))
