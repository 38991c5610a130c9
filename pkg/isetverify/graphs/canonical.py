# isetverify/graphs/canonical.py
"""
Canonical forms for isomorphism-free deduplication.

The vertex colouring is refined from degrees until stable (colour refinement);
colour classes, ordered by their refined signature, occupy consecutive label
positions. A backtracking search over the labelings that respect this order keeps
the lexicographically least upper-triangle word in graph6 column order. Twin
vertices (equal open or closed neighbourhoods) are interchangeable, so only one
of each twin class is branched on per position.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .graph import Graph, iter_bits
from . import graph6


@dataclass(frozen=True, order=True, slots=True)
class CanonicalForm:
    """Vertex count plus the canonical word; the first pair x(0,1) is the most significant bit."""
    n: int
    bits: int

    def to_graph(self) -> Graph:
        rows = [0] * self.n
        position = self.n * (self.n - 1) // 2 - 1
        for j in range(1, self.n):
            for i in range(j):
                if self.bits >> position & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                position -= 1
        return Graph(self.n, rows)

    def graph6(self) -> str:
        return graph6.encode(self.to_graph())


def refine_colors(g: Graph) -> List[int]:
    """Stable colour refinement starting from degrees; colours are isomorphism-invariant ranks."""
    colors = g.degrees()
    distinct = len(set(colors))
    while True:
        signatures = [
            (colors[v], tuple(sorted(colors[u] for u in iter_bits(g.rows[v]))))
            for v in range(g.n)
        ]
        palette: Dict[tuple, int] = {sig: rank for rank, sig in enumerate(sorted(set(signatures)))}
        refined = [palette[sig] for sig in signatures]
        if len(palette) == distinct:
            # Same number of classes as before: the partition is stable. Use the
            # rank form so colours are comparable across graphs.
            return refined
        colors = refined
        distinct = len(palette)


def canonical_labeling(g: Graph, colors: Optional[List[int]] = None) -> Tuple[CanonicalForm, Tuple[int, ...]]:
    """
    Returns the canonical form and ``order`` with ``order[p]`` the vertex placed at position ``p``.
    ``colors`` may pass in a colouring already computed by ``refine_colors(g)``.
    """
    n = g.n
    if n <= 1:
        return CanonicalForm(n, 0), tuple(range(n))

    rows = g.rows
    if colors is None:
        colors = refine_colors(g)
    cell_members: Dict[int, int] = {}
    for v, c in enumerate(colors):
        cell_members[c] = cell_members.get(c, 0) | 1 << v
    position_cell: List[int] = []
    for c in sorted(cell_members):
        position_cell.extend([c] * cell_members[c].bit_count())

    order: List[int] = []
    cols: List[int] = [0] * n
    best_cols: Optional[List[int]] = None
    best_order: Optional[List[int]] = None

    def search(j: int, used: int, less: bool) -> None:
        nonlocal best_cols, best_order
        if j == n:
            best_cols = cols[:]
            best_order = order[:]
            return
        seen_open = set()
        seen_closed = set()
        candidates = []
        for v in iter_bits(cell_members[position_cell[j]] & ~used):
            row = rows[v]
            closed = row | 1 << v
            if row in seen_open or closed in seen_closed:
                continue
            seen_open.add(row)
            seen_closed.add(closed)
            col = 0
            for u in order:
                col = col << 1 | (row >> u & 1)
            candidates.append((col, v))
        candidates.sort()
        for col, v in candidates:
            if best_cols is not None and not less:
                bound = best_cols[j]
                if col > bound:
                    break
                child_less = col < bound
            else:
                child_less = True
            order.append(v)
            cols[j] = col
            search(j + 1, used | 1 << v, child_less)
            order.pop()
            # Any completed leaf below extends the current prefix, so from here on
            # the prefix equals the best one.
            less = False

    search(0, 0, False)
    assert best_cols is not None and best_order is not None
    word = 0
    for j in range(1, n):
        word = word << j | best_cols[j]
    return CanonicalForm(n, word), tuple(best_order)


def canonical_form(g: Graph) -> CanonicalForm:
    return canonical_labeling(g)[0]


def canonical_graph(g: Graph) -> Graph:
    """The canonical relabeling of ``g``."""
    return canonical_form(g).to_graph()


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.edge_count() == h.edge_count() and canonical_form(g) == canonical_form(h)
