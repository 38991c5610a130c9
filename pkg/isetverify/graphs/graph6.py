# isetverify/graphs/graph6.py
"""graph6 encoding for graphs on at most 62 vertices."""
from __future__ import annotations

from typing import Iterable, Iterator, Tuple

from ..errors import Graph6Error, GraphError
from .graph import Graph

GRAPH6_MAX_VERTICES = 62
HEADER = ">>graph6<<"


def strip_header(text: str) -> str:
    """Removes the optional '>>graph6<<' header and surrounding whitespace."""
    s = text.strip()
    if s.startswith(HEADER):
        s = s[len(HEADER):].strip()
    return s


def _column_bits(g: Graph) -> Iterator[int]:
    # x(0,1), x(0,2), x(1,2), x(0,3), ...
    for j in range(1, g.n):
        row = g.rows[j]
        for i in range(j):
            yield row >> i & 1


def encode(g: Graph) -> str:
    if g.n > GRAPH6_MAX_VERTICES:
        raise GraphError(f"graph6 encoding supports at most {GRAPH6_MAX_VERTICES} vertices, got {g.n}")
    out = [chr(g.n + 63)]
    group = 0
    width = 0
    for bit in _column_bits(g):
        group = group << 1 | bit
        width += 1
        if width == 6:
            out.append(chr(group + 63))
            group = 0
            width = 0
    if width:
        out.append(chr((group << (6 - width)) + 63))
    return "".join(out)


def decode(text: str) -> Graph:
    s = strip_header(text)
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside the graph6 range 63..126")
    n = ord(s[0]) - 63
    if n > GRAPH6_MAX_VERTICES:
        raise Graph6Error(f"graphs with more than {GRAPH6_MAX_VERTICES} vertices are not supported")
    if n == 0:
        raise Graph6Error("the 0-vertex graph cannot be decoded")
    pair_count = n * (n - 1) // 2
    expected = 1 + (pair_count + 5) // 6
    if len(s) != expected:
        raise Graph6Error(f"expected {expected} characters for n={n}, got {len(s)}")

    word = 0
    for ch in s[1:]:
        word = word << 6 | (ord(ch) - 63)
    padding = (expected - 1) * 6 - pair_count
    if word & ((1 << padding) - 1):
        raise Graph6Error("nonzero padding bits")
    word >>= padding

    rows = [0] * n
    position = pair_count - 1
    for j in range(1, n):
        for i in range(j):
            if word >> position & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            position -= 1
    return Graph(n, rows)


def decode_lines(lines: Iterable[str]) -> Iterator[Tuple[int, Graph]]:
    """Decodes one graph per non-blank line, yielding (1-based line number, graph)."""
    for number, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            yield number, decode(line)
        except Graph6Error as e:
            raise Graph6Error.at_line(number, e.detail) from e
