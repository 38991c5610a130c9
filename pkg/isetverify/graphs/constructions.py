# isetverify/graphs/constructions.py
"""Builders for the named graph families: extremal candidates and test fixtures."""
from __future__ import annotations

import itertools
import logging
from typing import Callable, Dict, List, Sequence

from ..errors import GraphError, PreconditionError
from ..models.graph_specs import MultipartiteSpec
from .canonical import canonical_form
from .graph import MAX_VERTICES, Edge, Graph, from_edge_list

logger = logging.getLogger(__name__)


def complete_bipartite(a: int, b: int) -> Graph:
    """Parts {0..a-1} and {a..a+b-1}."""
    if a < 0 or b < 0 or a + b < 1:
        raise PreconditionError(f"complete bipartite graph needs a, b >= 0 and a + b >= 1, got ({a}, {b})")
    return from_edge_list(a + b, [(u, v) for u in range(a) for v in range(a, a + b)])


def extremal_plus_inside_edges(delta: int, n: int, inside_edges: Sequence[Edge]) -> Graph:
    """K_{delta, n-delta} with extra edges inside the part {0..delta-1}."""
    if not 0 <= delta < n:
        raise PreconditionError(f"need 0 <= delta < n, got delta={delta}, n={n}")
    for u, v in inside_edges:
        if not (0 <= u < delta and 0 <= v < delta):
            raise GraphError(f"inside pair ({u}, {v}) is not within the part of size {delta}")
    base = complete_bipartite(delta, n - delta)
    return from_edge_list(n, base.edges() + list(inside_edges))


def k_prime(n: int) -> Graph:
    """K'_{2,n-2}: K_{2,n-2} with the two vertices of the small part joined."""
    return extremal_plus_inside_edges(2, n, [(0, 1)])


def inside_edge_family(n: int, delta: int) -> List[Graph]:
    """K_{delta,n-delta} plus every subset of the inside pairs, one graph per isomorphism class."""
    pairs = list(itertools.combinations(range(delta), 2))
    by_form = {}
    for size in range(len(pairs) + 1):
        for chosen in itertools.combinations(pairs, size):
            g = extremal_plus_inside_edges(delta, n, chosen)
            by_form.setdefault(canonical_form(g), g)
    return [form.to_graph() for form in sorted(by_form)]


def windmill(n: int) -> Graph:
    """(n-1)/2 triangles sharing vertex 0."""
    if n < 3 or n % 2 == 0:
        raise PreconditionError(f"windmill needs odd n >= 3, got {n}")
    edges = []
    for u in range(1, n, 2):
        edges += [(0, u), (0, u + 1), (u, u + 1)]
    return from_edge_list(n, edges)


def path(k: int) -> Graph:
    if k < 1:
        raise PreconditionError(f"path needs k >= 1, got {k}")
    return from_edge_list(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise PreconditionError(f"cycle needs k >= 3, got {k}")
    return from_edge_list(k, [(i, (i + 1) % k) for i in range(k)])


def empty_graph(k: int) -> Graph:
    """E_k; k = 0 gives the 0-vertex graph."""
    if k < 0:
        raise PreconditionError(f"empty graph needs k >= 0, got {k}")
    if k == 0:
        return Graph(0, ())
    return from_edge_list(k, [])


def complete_multipartite(spec: MultipartiteSpec | Sequence[int]) -> Graph:
    """Parts occupy ascending vertex blocks in the given order."""
    if not isinstance(spec, MultipartiteSpec):
        spec = MultipartiteSpec(parts=list(spec))
    n = sum(spec.parts)
    if n > MAX_VERTICES:
        raise GraphError(f"{n} vertices exceed the supported width {MAX_VERTICES}")
    block = []
    for index, size in enumerate(spec.parts):
        block.extend([index] * size)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if block[u] != block[v]]
    return from_edge_list(n, edges)


def conjecture_multipartite_parts(n: int, delta: int) -> List[int]:
    """q parts of size n-delta plus a part of size x, where n = q(n-delta) + x and 0 <= x < n-delta."""
    if not n >= delta + 1 >= 2:
        raise PreconditionError(f"need n >= delta + 1 >= 2, got n={n}, delta={delta}")
    size = n - delta
    q, x = divmod(n, size)
    return [size] * q + ([x] if x else [])


def conjecture_multipartite(n: int, delta: int) -> Graph:
    return complete_multipartite(conjecture_multipartite_parts(n, delta))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n == 0 or h.n == 0:
        raise PreconditionError("disjoint union needs two graphs with at least one vertex")
    if g.n + h.n > MAX_VERTICES:
        raise GraphError(f"{g.n + h.n} vertices exceed the supported width {MAX_VERTICES}")
    rows = list(g.rows) + [row << g.n for row in h.rows]
    return Graph(g.n + h.n, rows)


def pattern_host() -> Graph:
    """
    A critical minimum-degree-3 graph on 10 vertices carrying the triangle-rewiring
    configuration: hub 0 (degree 5) adjacent to 1 and 4, triangles 1-2-3 and 4-5-6,
    cross edges 2-6 and 3-5, and a third triangle 7-8-9 fully joined to the hub.
    """
    edges = [
        (0, 1), (1, 2), (1, 3), (2, 3),
        (0, 4), (4, 5), (4, 6), (5, 6),
        (2, 6), (3, 5),
        (0, 7), (0, 8), (0, 9), (7, 8), (7, 9), (8, 9),
    ]
    return from_edge_list(10, edges)


def _int(params: Dict[str, object], key: str) -> int:
    if key not in params or params[key] is None:
        raise PreconditionError(f"missing parameter '{key}'")
    return int(params[key])


FAMILIES: Dict[str, Callable[[Dict[str, object]], Graph]] = {
    "complete_bipartite": lambda p: complete_bipartite(_int(p, "a"), _int(p, "b")),
    "extremal_plus": lambda p: extremal_plus_inside_edges(_int(p, "delta"), _int(p, "n"), p.get("inside") or []),
    "k_prime": lambda p: k_prime(_int(p, "n")),
    "windmill": lambda p: windmill(_int(p, "n")),
    "path": lambda p: path(_int(p, "k")),
    "cycle": lambda p: cycle(_int(p, "k")),
    "empty": lambda p: empty_graph(_int(p, "k")),
    "multipartite": lambda p: complete_multipartite(p.get("parts") or []),
    "conjecture_multipartite": lambda p: conjecture_multipartite(_int(p, "n"), _int(p, "delta")),
    "disjoint_union": lambda p: disjoint_union(p["left"], p["right"]),
    "pattern_host": lambda p: pattern_host(),
}


def by_name(family: str, params: Dict[str, object]) -> Graph:
    """Looks up a family by name and builds it from keyword parameters."""
    builder = FAMILIES.get(family)
    if builder is None:
        raise PreconditionError(f"unknown family '{family}'; known: {', '.join(sorted(FAMILIES))}")
    logger.debug(f"Building family {family} with {params}")
    return builder(params)
