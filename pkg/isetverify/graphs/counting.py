# isetverify/graphs/counting.py
"""
Exact counts of independent sets by size.

The independence polynomial is computed by branching on a maximum-degree vertex,
i_t(G) = i_t(G - v) + i_{t-1}(G - v - N(v)), factoring across connected components
by convolution. Subproblems are vertex masks of the input graph, memoised per call.
"""
from __future__ import annotations

import itertools
import math
from typing import Dict, Iterator, Sequence, Tuple

from ..errors import PreconditionError
from .graph import Graph, iter_bits


class CountVector:
    """(i_0, i_1, ..., i_alpha); indexing past alpha returns 0."""

    __slots__ = ("counts",)

    def __init__(self, counts: Sequence[int]):
        self.counts: Tuple[int, ...] = tuple(counts)

    def __getitem__(self, t: int) -> int:
        if t < 0:
            raise PreconditionError(f"independent-set size must be nonnegative, got {t}")
        return self.counts[t] if t < len(self.counts) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.counts)

    def __len__(self) -> int:
        return len(self.counts)

    @property
    def alpha(self) -> int:
        return len(self.counts) - 1

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CountVector):
            return self.counts == other.counts
        if isinstance(other, (tuple, list)):
            return self.counts == tuple(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.counts)

    def __repr__(self) -> str:
        return f"CountVector({list(self.counts)})"


def binomial(a: int, b: int) -> int:
    """C(a, b) with C(a, b) = 0 whenever b < 0 or b > a."""
    if b < 0 or a < 0 or b > a:
        return 0
    return math.comb(a, b)


def falling_power(x: int, t: int) -> int:
    if t < 0:
        raise PreconditionError(f"falling power needs t >= 0, got {t}")
    result = 1
    for i in range(t):
        result *= x - i
    return result


def convolve(a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return tuple(out)


def _polynomial(rows: Sequence[int], mask: int, memo: Dict[int, Tuple[int, ...]]) -> Tuple[int, ...]:
    if not mask:
        return (1,)
    cached = memo.get(mask)
    if cached is not None:
        return cached

    start = (mask & -mask).bit_length() - 1
    comp = 1 << start
    frontier = comp
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= rows[v]
        frontier = reach & mask & ~comp
        comp |= frontier

    if comp != mask:
        result = convolve(_polynomial(rows, comp, memo), _polynomial(rows, mask & ~comp, memo))
    else:
        best, best_degree = start, -1
        for v in iter_bits(mask):
            d = (rows[v] & mask).bit_count()
            if d > best_degree:
                best, best_degree = v, d
        if best_degree == 0:
            size = mask.bit_count()
            result = tuple(math.comb(size, t) for t in range(size + 1))
        else:
            without = _polynomial(rows, mask & ~(1 << best), memo)
            with_v = _polynomial(rows, mask & ~(1 << best) & ~rows[best], memo)
            length = max(len(without), len(with_v) + 1)
            merged = [0] * length
            for t, c in enumerate(without):
                merged[t] += c
            for t, c in enumerate(with_v):
                merged[t + 1] += c
            result = tuple(merged)
    memo[mask] = result
    return result


def independence_vector(g: Graph) -> CountVector:
    return CountVector(_polynomial(g.rows, g.vertex_mask, {}))


def count_independent_sets_of_size(g: Graph, t: int) -> int:
    return independence_vector(g)[t]


def total_independent_sets(g: Graph) -> int:
    return independence_vector(g).total


def independence_number(g: Graph) -> int:
    return independence_vector(g).alpha


def ordered_count(g: Graph, t: int) -> int:
    """Independent sets of size t with a linear order on their vertices."""
    return count_independent_sets_of_size(g, t) * math.factorial(t)


def count_by_subset_scan(g: Graph, t: int) -> int:
    """Brute force over all C(n, t) vertex subsets."""
    if t < 0:
        raise PreconditionError(f"independent-set size must be nonnegative, got {t}")
    count = 0
    for subset in itertools.combinations(range(g.n), t):
        mask = 0
        for v in subset:
            mask |= 1 << v
        if all(not (g.rows[v] & mask) for v in subset):
            count += 1
    return count


def closed_form_path(k: int, t: int) -> int:
    """i_t(P_k) = C(k+1-t, t)."""
    if k < 1:
        raise PreconditionError(f"path needs k >= 1, got {k}")
    return binomial(k + 1 - t, t)


def closed_form_cycle(k: int, t: int) -> int:
    """i_t(C_k) = C(k-t, t) + C(k-t-1, t-1)."""
    if k < 3:
        raise PreconditionError(f"cycle needs k >= 3, got {k}")
    if t < 0:
        return 0
    return binomial(k - t, t) + binomial(k - t - 1, t - 1)


def extremal_value(n: int, delta: int, t: int) -> int:
    """i_t(K_{delta, n-delta}) = C(n-delta, t) + C(delta, t); the empty set is counted once at t = 0."""
    if delta < 0 or delta > n:
        raise PreconditionError(f"need 0 <= delta <= n, got n={n}, delta={delta}")
    if t < 0:
        raise PreconditionError(f"independent-set size must be nonnegative, got {t}")
    if t == 0:
        return 1
    return binomial(n - delta, t) + binomial(delta, t)


def easy_upper_bound(n: int, delta: int, t: int) -> int:
    """floor(n (n-(delta+1)) ... (n-(delta+t-1)) / t!), valid for every graph of minimum degree delta."""
    if t < 1:
        raise PreconditionError(f"easy upper bound needs t >= 1, got {t}")
    if n < delta + 1:
        raise PreconditionError(f"easy upper bound needs n >= delta + 1, got n={n}, delta={delta}")
    product = n
    for i in range(1, t):
        factor = n - (delta + i)
        if factor <= 0:
            return 0
        product *= factor
    return product // math.factorial(t)
