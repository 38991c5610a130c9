# isetverify/graphs/criticality.py
"""
Edge- and vertex-criticality at a fixed minimum degree, the path/cycle split of
connected critical graphs with minimum degree 2, and the triangle-rewiring move
on minimum-degree-3 graphs.
"""
from __future__ import annotations

import itertools
import logging
from typing import List, Optional

from ..errors import PreconditionError
from ..models.structure import (
    CriticalityReport,
    Decomposition2,
    DegreePartition,
    RewirePattern,
)
from .graph import Edge, Graph, iter_bits

logger = logging.getLogger(__name__)


def _require_min_degree(g: Graph, delta: int) -> None:
    if delta < 1:
        raise PreconditionError(f"criticality needs delta >= 1, got {delta}")
    if g.n == 0 or g.min_degree() != delta:
        found = "undefined" if g.n == 0 else g.min_degree()
        raise PreconditionError(f"minimum degree is {found}, expected {delta}")


# --- degree-based tests ---

def edge_witness(g: Graph, delta: int) -> Optional[Edge]:
    """First edge whose endpoints both have degree above delta, if any."""
    _require_min_degree(g, delta)
    degrees = g.degrees()
    for u, v in g.edges():
        if degrees[u] > delta and degrees[v] > delta:
            return (u, v)
    return None


def vertex_witness(g: Graph, delta: int) -> Optional[int]:
    """First vertex with no neighbour of degree exactly delta, if any."""
    _require_min_degree(g, delta)
    degrees = g.degrees()
    low = 0
    for v, d in enumerate(degrees):
        if d == delta:
            low |= 1 << v
    for v in range(g.n):
        if not g.rows[v] & low:
            return v
    return None


def is_edge_critical(g: Graph, delta: int) -> bool:
    return edge_witness(g, delta) is None


def is_vertex_critical(g: Graph, delta: int) -> bool:
    return vertex_witness(g, delta) is None


def criticality(g: Graph, delta: int) -> CriticalityReport:
    e = edge_witness(g, delta)
    v = vertex_witness(g, delta)
    return CriticalityReport(
        delta=delta,
        edge_critical=e is None,
        vertex_critical=v is None,
        edge_witness=e,
        vertex_witness=v,
    )


def is_critical(g: Graph, delta: int) -> bool:
    return is_edge_critical(g, delta) and is_vertex_critical(g, delta)


# --- literal deletion-based definitions ---

def good_deletion_vertices(g: Graph, delta: int) -> List[int]:
    """Vertices v with min_degree(G - v) >= delta."""
    _require_min_degree(g, delta)
    if g.n == 1:
        return []
    return [v for v in range(g.n) if g.delete_vertex(v).min_degree() >= delta]


def good_deletion_edges(g: Graph, delta: int) -> List[Edge]:
    """Edges e with min_degree(G - e) >= delta."""
    _require_min_degree(g, delta)
    return [(u, v) for u, v in g.edges() if g.delete_edge(u, v).min_degree() >= delta]


def is_edge_critical_by_deletion(g: Graph, delta: int) -> bool:
    return not good_deletion_edges(g, delta)


def is_vertex_critical_by_deletion(g: Graph, delta: int) -> bool:
    return not good_deletion_vertices(g, delta)


def degree_partition(g: Graph, delta: int) -> DegreePartition:
    _require_min_degree(g, delta)
    degrees = g.degrees()
    return DegreePartition(
        delta=delta,
        exactly_delta=[v for v, d in enumerate(degrees) if d == delta],
        above_delta=[v for v, d in enumerate(degrees) if d > delta],
    )


# --- minimum degree 2: cycle or path split ---

def _follow_chain(g: Graph, start: int, first: int, degrees: List[int]) -> tuple[List[int], int]:
    """
    Walks from ``start`` into ``first`` and onwards through degree-2 vertices.
    Returns the degree-2 vertices visited, in order, and the vertex of higher
    degree the walk stops at.
    """
    chain = []
    previous, current = start, first
    while degrees[current] == 2:
        chain.append(current)
        following = [u for u in iter_bits(g.rows[current]) if u != previous]
        previous, current = current, following[0]
    return chain, current


def decompose_critical_2(g: Graph) -> Decomposition2:
    """
    Splits a connected critical graph of minimum degree 2. A 2-regular graph is
    a cycle. With one vertex v of degree above 2 the path is a cycle through v
    with v dropped. Otherwise the path is the interior of a shortest chain of
    degree-2 vertices between two distinct high-degree vertices; the lowest
    such chain wins ties.
    """
    _require_min_degree(g, 2)
    if not g.is_connected():
        raise PreconditionError("decomposition needs a connected graph")
    report = criticality(g, 2)
    if not report.critical:
        raise PreconditionError(f"decomposition needs a critical graph, got {report.model_dump()}")

    if g.is_regular():
        return Decomposition2(kind="cycle")

    degrees = g.degrees()
    high = [v for v, d in enumerate(degrees) if d > 2]
    if len(high) == 1:
        hub = high[0]
        first = min(iter_bits(g.rows[hub]))
        chain, end = _follow_chain(g, hub, first, degrees)
        if end != hub:
            raise PreconditionError(f"walk from {hub} ended at {end}, which is not the unique high-degree vertex")
        split = _path_split(g, chain, hub, hub)
    else:
        best = None
        for a in high:
            for first in iter_bits(g.rows[a]):
                chain, b = _follow_chain(g, a, first, degrees)
                if b == a or not chain:
                    continue
                key = (len(chain), chain)
                if best is None or key < best[0]:
                    best = (key, a, b)
        if best is None:
            raise PreconditionError("no chain joins two distinct high-degree vertices")
        (_, chain), a, b = best
        split = _path_split(g, chain, a, b)

    problems = decomposition_violations(g, split)
    if problems:
        raise PreconditionError(f"decomposition failed its own checks: {'; '.join(problems)}")
    logger.debug(f"Decomposed {g!r} into y1={split.y1}, v1={split.v1}, v2={split.v2}")
    return split


def _path_split(g: Graph, chain: List[int], v1: int, v2: int) -> Decomposition2:
    inside = set(chain)
    return Decomposition2(
        kind="path_split",
        y1=list(chain),
        y2=[v for v in range(g.n) if v not in inside],
        v1=v1,
        v2=v2,
    )


def decomposition_violations(g: Graph, d: Decomposition2) -> List[str]:
    """Every decomposition invariant ``d`` fails on ``g``; empty when it is valid."""
    problems = []
    if d.kind == "cycle":
        if not (g.is_connected() and g.is_regular() and g.min_degree() == 2):
            problems.append("graph is not a connected 2-regular graph")
        return problems

    if d.y1 is None or d.y2 is None or d.v1 is None or d.v2 is None:
        return ["path split is missing y1, y2, v1 or v2"]
    y1, y2 = d.y1, d.y2
    if not y1:
        return ["y1 is empty"]
    if sorted(y1 + y2) != list(range(g.n)):
        problems.append("y1 and y2 do not partition the vertex set")
        return problems
    if not 2 <= len(y1) <= g.n - 3:
        problems.append(f"|y1| = {len(y1)} outside 2..{g.n - 3}")

    path_graph = g.induced_subgraph(y1)
    consecutive = all(g.has_edge(y1[i], y1[i + 1]) for i in range(len(y1) - 1))
    if not consecutive or path_graph.edge_count() != len(y1) - 1:
        problems.append("y1 does not induce a path in the given order")

    if len(y2) == 0 or g.induced_subgraph(y2).min_degree() < 2:
        problems.append("y2 does not induce minimum degree 2")

    y2_mask = 0
    for v in y2:
        y2_mask |= 1 << v
    head, tail = y1[0], y1[-1]
    if set(iter_bits(g.rows[head] & y2_mask)) != {d.v1}:
        problems.append(f"first path vertex {head} does not have {d.v1} as its only y2 neighbour")
    if set(iter_bits(g.rows[tail] & y2_mask)) != {d.v2}:
        problems.append(f"last path vertex {tail} does not have {d.v2} as its only y2 neighbour")
    for v in y1[1:-1]:
        if g.rows[v] & y2_mask:
            problems.append(f"interior path vertex {v} has a y2 neighbour")
    if d.v1 != d.v2 and g.has_edge(d.v1, d.v2):
        problems.append(f"boundary vertices {d.v1} and {d.v2} are adjacent")
    return problems


def verify_decomposition(g: Graph, d: Decomposition2) -> bool:
    return not decomposition_violations(g, d)


# --- minimum degree 3: triangle rewiring ---

def _triangle_partners(g: Graph, v: int, hub: int, degrees: List[int]) -> Optional[tuple[int, int]]:
    """N(v) - {hub} when it is an adjacent pair of degree-3 vertices."""
    rest = [u for u in iter_bits(g.rows[v]) if u != hub]
    if len(rest) != 2:
        return None
    a, b = rest
    if degrees[a] == 3 and degrees[b] == 3 and g.rows[a] >> b & 1:
        return a, b
    return None


def find_rewire_patterns(g: Graph) -> List[RewirePattern]:
    """
    Every hub w1 of degree above 3 with two degree-3 neighbours v < x whose other
    neighbours form triangles v-w2-w3 and x-y2-y3, for each pairing of the
    triangles with w2 !~ y2 and w3 !~ y3. Sorted by vertex tuple.
    """
    _require_min_degree(g, 3)
    degrees = g.degrees()
    patterns = []
    for w1 in range(g.n):
        if degrees[w1] <= 3:
            continue
        arms = []
        for v in iter_bits(g.rows[w1]):
            if degrees[v] != 3:
                continue
            partners = _triangle_partners(g, v, w1, degrees)
            if partners is not None:
                arms.append((v, partners))
        for (v, (w2, w3)), (x, (c, d)) in itertools.combinations(arms, 2):
            if len({w1, v, w2, w3, x, c, d}) != 7:
                continue
            for y2, y3 in ((c, d), (d, c)):
                if g.has_edge(w2, y2) or g.has_edge(w3, y3):
                    continue
                patterns.append(RewirePattern(w1=w1, v=v, w2=w2, w3=w3, x=x, y2=y2, y3=y3))
    patterns.sort(key=lambda p: p.vertices())
    return patterns


def is_valid_pattern(g: Graph, p: RewirePattern) -> bool:
    vertices = p.vertices()
    if any(not 0 <= u < g.n for u in vertices) or len(set(vertices)) != 7:
        return False
    degrees = g.degrees()
    if degrees[p.w1] <= 3:
        return False
    if any(degrees[u] != 3 for u in (p.v, p.w2, p.w3, p.x, p.y2, p.y3)):
        return False
    required = [
        (p.w1, p.v), (p.w1, p.x),
        (p.v, p.w2), (p.v, p.w3), (p.w2, p.w3),
        (p.x, p.y2), (p.x, p.y3), (p.y2, p.y3),
    ]
    if not all(g.has_edge(a, b) for a, b in required):
        return False
    return not g.has_edge(p.w2, p.y2) and not g.has_edge(p.w3, p.y3)


def triangle_rewire(g: Graph, p: RewirePattern) -> Graph:
    """Removes w2w3 and y2y3, adds w2y2 and w3y3. Degrees are unchanged."""
    if not is_valid_pattern(g, p):
        raise PreconditionError(f"{p.model_dump()} is not a valid rewiring pattern in {g!r}")
    return (
        g.delete_edge(p.w2, p.w3)
        .delete_edge(p.y2, p.y3)
        .add_edge(p.w2, p.y2)
        .add_edge(p.w3, p.y3)
    )
