# isetverify/graphs/graph.py
"""
Immutable simple graphs on dense 0-based vertex labels.

Row ``v`` of the adjacency is a Python int used as a bit vector: bit ``u`` is set
iff ``u ~ v``. Every edit returns a new ``Graph``; nothing mutates in place.
"""
from __future__ import annotations

from typing import Iterable, Iterator, List, Sequence, Tuple, FrozenSet

from ..errors import GraphError, PreconditionError

MAX_VERTICES = 64

Edge = Tuple[int, int]


def iter_bits(mask: int) -> Iterator[int]:
    """Yields the indices of the set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


class Graph:
    """A simple undirected graph with adjacency stored as bit rows."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, rows: Sequence[int]):
        # Trusted constructor: callers outside this package go through from_edge_list.
        self.n = n
        self.rows: Tuple[int, ...] = tuple(rows)

    # --- queries ---

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range for a graph on {self.n} vertices")

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.rows[v].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self.rows]

    def min_degree(self) -> int:
        if self.n == 0:
            raise PreconditionError("minimum degree of the 0-vertex graph is undefined")
        return min(row.bit_count() for row in self.rows)

    def max_degree(self) -> int:
        if self.n == 0:
            raise PreconditionError("maximum degree of the 0-vertex graph is undefined")
        return max(row.bit_count() for row in self.rows)

    def is_regular(self) -> bool:
        return self.n > 0 and self.min_degree() == self.max_degree()

    def neighbors(self, v: int) -> FrozenSet[int]:
        self._check_vertex(v)
        return frozenset(iter_bits(self.rows[v]))

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.rows[u] >> v & 1)

    def edges(self) -> List[Edge]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.rows[u] >> (u + 1) << (u + 1))]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    # --- edits ---

    def delete_vertex(self, v: int) -> "Graph":
        self._check_vertex(v)
        return self.induced_subgraph(u for u in range(self.n) if u != v)

    def delete_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) is not present")
        rows = list(self.rows)
        rows[u] &= ~(1 << v)
        rows[v] &= ~(1 << u)
        return Graph(self.n, rows)

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise GraphError(f"loop ({u}, {v}) is not allowed")
        if self.has_edge(u, v):
            raise GraphError(f"edge ({u}, {v}) is already present")
        rows = list(self.rows)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, rows)

    def induced_subgraph(self, vertices: Iterable[int]) -> "Graph":
        """G[S]; members keep their relative order. The empty set gives the 0-vertex graph."""
        chosen = sorted(set(vertices))
        for v in chosen:
            self._check_vertex(v)
        position = {v: i for i, v in enumerate(chosen)}
        rows = []
        for v in chosen:
            row = 0
            for u in iter_bits(self.rows[v]):
                i = position.get(u)
                if i is not None:
                    row |= 1 << i
            rows.append(row)
        return Graph(len(chosen), rows)

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph(self.n, [(full ^ row) & ~(1 << v) for v, row in enumerate(self.rows)])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex ``v`` becomes ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError(f"{list(perm)} is not a permutation of range({self.n})")
        rows = [0] * self.n
        for v, row in enumerate(self.rows):
            rows[perm[v]] = mask_of(perm[u] for u in iter_bits(row))
        return Graph(self.n, rows)

    # --- connectivity ---

    def component_mask(self, start: int, within: int | None = None) -> int:
        """Vertices reachable from ``start`` inside the vertex mask ``within``."""
        within = self.vertex_mask if within is None else within
        seen = 1 << start
        frontier = seen
        while frontier:
            reach = 0
            for v in iter_bits(frontier):
                reach |= self.rows[v]
            frontier = reach & within & ~seen
            seen |= frontier
        return seen

    def components(self) -> List[FrozenSet[int]]:
        if self.n == 0:
            raise PreconditionError("components of the 0-vertex graph are undefined")
        remaining = self.vertex_mask
        parts = []
        while remaining:
            start = (remaining & -remaining).bit_length() - 1
            comp = self.component_mask(start, remaining)
            parts.append(frozenset(iter_bits(comp)))
            remaining &= ~comp
        return parts

    def is_connected(self) -> bool:
        if self.n == 0:
            raise PreconditionError("connectivity of the 0-vertex graph is undefined")
        return self.component_mask(0) == self.vertex_mask

    # --- value semantics ---

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edge_list(n: int, edges: Iterable[Edge]) -> Graph:
    """Builds a graph with exactly the given edges; duplicate pairs collapse."""
    if not 1 <= n <= MAX_VERTICES:
        raise GraphError(f"vertex count {n} outside the supported range 1..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop ({u}, {v}) is not allowed")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)
