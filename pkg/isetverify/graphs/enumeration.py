# isetverify/graphs/enumeration.py
"""
Isomorphism-free generation of graphs with a minimum-degree floor.

The search starts at K_n and deletes edges whose endpoints both have degree
above delta, so every node has minimum degree >= delta. A graph X is generated
from exactly one parent class: X + m, where m is X's preferred non-edge. The
preferred non-edges are those with the largest endpoint degree pair, then the
largest refined colour pair; among what is left, the first one in X's canonical
word. A child X = P - e is accepted iff e is preferred in X up to an
automorphism of X, and isomorphic children of the same parent are kept once.
The degree and colour screens reject most children before any canonical
labeling runs. Nodes are stored as canonical graphs, so equal classes are equal
objects.

Connected critical graphs at minimum degree 2 are built directly from their
thread structure instead of being searched for.
"""
from __future__ import annotations

import itertools
import logging
import time
from typing import Callable, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..errors import BudgetExceededError
from ..models.graph_specs import EnumSpec, ShardSpec
from .canonical import CanonicalForm, canonical_form, canonical_labeling, refine_colors
from .criticality import is_critical, is_vertex_critical
from .graph import Edge, Graph, from_edge_list

logger = logging.getLogger(__name__)

DEFAULT_MAX_VERTICES = 9
HARD_MAX_VERTICES = 10

Node = Tuple[CanonicalForm, Graph]


class Budget:
    """Class-count budget plus a wall-clock backstop and the vertex cap."""

    DEADLINE_CHECK_EVERY = 256

    def __init__(
        self,
        max_classes: Optional[int] = None,
        timeout_seconds: Optional[float] = None,
        max_vertices: int = DEFAULT_MAX_VERTICES,
        allow_n10: bool = False,
        deadline: Optional[float] = None,
    ):
        """``deadline`` is an absolute ``time.time()``; when absent it is derived from ``timeout_seconds``."""
        self.max_classes = max_classes
        self.timeout_seconds = timeout_seconds
        self.max_vertices = max_vertices
        self.allow_n10 = allow_n10
        if deadline is None and timeout_seconds is not None:
            deadline = time.time() + timeout_seconds
        self.deadline = deadline
        self.classes = 0
        self._nodes = 0

    @classmethod
    def from_settings(cls, settings) -> "Budget":
        return cls(
            max_classes=settings.max_classes,
            timeout_seconds=settings.timeout_seconds,
            max_vertices=settings.max_enumeration_vertices,
            allow_n10=settings.allow_n10,
        )

    def admit(self, n: int) -> None:
        if n < HARD_MAX_VERTICES and n <= self.max_vertices:
            return
        # n = 10 needs the explicit flag whatever the configured cap says.
        if n == HARD_MAX_VERTICES and self.allow_n10:
            return
        hint = " (pass --allow-n10 to unlock n = 10)" if n == HARD_MAX_VERTICES else ""
        cap = min(self.max_vertices, HARD_MAX_VERTICES - 1)
        raise BudgetExceededError(f"enumeration on {n} vertices exceeds the supported cap of {cap}{hint}")

    def tick_node(self) -> None:
        self._nodes += 1
        if self.deadline is not None and self._nodes % self.DEADLINE_CHECK_EVERY == 0:
            self.check_deadline()

    def check_deadline(self) -> None:
        if self.deadline is not None and time.time() > self.deadline:
            raise BudgetExceededError(f"wall-clock budget of {self.timeout_seconds}s exceeded after {self.classes} classes")

    def tick_class(self) -> None:
        self.classes += 1
        if self.max_classes is not None and self.classes > self.max_classes:
            raise BudgetExceededError(f"class budget of {self.max_classes} exceeded")


# --- generation tree ---

def _node(form: CanonicalForm) -> Node:
    return form, form.to_graph()


def _root(n: int) -> Node:
    return _node(canonical_form(from_edge_list(n, itertools.combinations(range(n), 2))))


def _pair(values: Sequence[int], a: int, b: int) -> Tuple[int, int]:
    x, y = values[a], values[b]
    return (x, y) if x <= y else (y, x)


def _canonical_deletion(child: Graph, u: int, v: int, gaps: Sequence[Edge], parent_form: CanonicalForm) -> Optional[CanonicalForm]:
    """
    The child's canonical form when the re-insertable edge uv is preferred in the
    child up to automorphism, else None. ``gaps`` are the child's other non-edges.
    """
    degrees = child.degrees()
    key = _pair(degrees, u, v)
    tied = [(u, v)]
    for a, b in gaps:
        other = _pair(degrees, a, b)
        if other > key:
            return None
        if other == key:
            tied.append((a, b))
    colors = None
    if len(tied) > 1:
        colors = refine_colors(child)
        key = _pair(colors, u, v)
        survivors = [(u, v)]
        for a, b in tied[1:]:
            other = _pair(colors, a, b)
            if other > key:
                return None
            if other == key:
                survivors.append((a, b))
        tied = survivors
    form, order = canonical_labeling(child, colors)
    if len(tied) == 1:
        return form
    position = [0] * child.n
    for p, w in enumerate(order):
        position[w] = p
    # First in graph6 column order: by the later position, then the earlier one.
    a, b = min(tied, key=lambda e: (max(position[e[0]], position[e[1]]), min(position[e[0]], position[e[1]])))
    if {a, b} == {u, v} or canonical_form(child.add_edge(a, b)) == parent_form:
        return form
    return None


def _children(node: Node, spec: EnumSpec) -> List[Node]:
    parent_form, parent = node
    if spec.connected_only and not parent.is_connected():
        # Deleting edges never reconnects a graph.
        return []
    delta = spec.min_degree
    degrees = parent.degrees()
    gaps = [(a, b) for a, b in itertools.combinations(range(parent.n), 2) if not parent.rows[a] >> b & 1]
    accepted = []
    seen = set()
    for u, v in parent.edges():
        if degrees[u] <= delta or degrees[v] <= delta:
            continue
        form = _canonical_deletion(parent.delete_edge(u, v), u, v, gaps, parent_form)
        if form is None or form in seen:
            continue
        seen.add(form)
        accepted.append(_node(form))
    accepted.sort(key=lambda pair: pair[0])
    return accepted


def _depth_first(start: Node, spec: EnumSpec, budget: Budget) -> Iterator[Node]:
    stack = [start]
    while stack:
        node = stack.pop()
        budget.tick_node()
        yield node
        stack.extend(reversed(_children(node, spec)))


def _accepts(spec: EnumSpec, g: Graph) -> bool:
    delta = spec.min_degree
    low = g.min_degree()
    if low < delta:
        return False
    if spec.exact_min_degree and low != delta:
        return False
    if spec.max_edges is not None and g.edge_count() > spec.max_edges:
        return False
    if spec.connected_only and not g.is_connected():
        return False
    if spec.critical_only and (low != delta or not is_critical(g, delta)):
        return False
    if spec.vertex_critical_only and (low != delta or not is_vertex_critical(g, delta)):
        return False
    return True


def spec_predicate(spec: EnumSpec) -> Callable[[Graph], bool]:
    """The membership test the enumeration applies, for brute-force comparison."""
    return lambda g: g.n == spec.n and _accepts(spec, g)


# --- connected critical graphs at minimum degree 2 ---

def _built_from_threads(spec: EnumSpec) -> bool:
    return spec.min_degree == 2 and spec.connected_only and spec.critical_only


def _hubs_fit(hubs: int, ends: Sequence[Edge]) -> bool:
    """Every hub has degree >= 3 (a loop counts twice) and the hub multigraph is connected."""
    degree = [0] * hubs
    reach = [1 << h for h in range(hubs)]
    for a, b in ends:
        degree[a] += 1
        degree[b] += 1
    if min(degree) < 3:
        return False
    joined = 1
    grew = True
    while grew:
        grew = False
        for a, b in ends:
            if (joined >> a & 1) != (joined >> b & 1):
                joined |= reach[a] | reach[b]
                grew = True
    return joined == (1 << hubs) - 1


def _threaded(n: int, hubs: int, ends: Sequence[Edge], lengths: Sequence[int]) -> Graph:
    edges = []
    fresh = hubs
    for (a, b), length in zip(ends, lengths):
        inner = list(range(fresh, fresh + length))
        fresh += length
        walk = [a, *inner, b]
        edges.extend(zip(walk, walk[1:]))
    assert fresh == n
    return from_edge_list(n, edges)


def thread_classes(n: int) -> List[CanonicalForm]:
    """
    Connected critical classes on n vertices at minimum degree 2, sorted.

    Such a graph is the cycle C_n, or it has an independent set of hubs of degree
    >= 3 joined (or looped back to themselves) by threads of >= 2 degree-2
    vertices: a shorter thread would leave an edge or a vertex removable.
    """
    if n < 3:
        return []
    forms = {canonical_form(from_edge_list(n, [(i, (i + 1) % n) for i in range(n)]))}
    for hubs in range(1, n // 4 + 1):
        slots = list(itertools.combinations_with_replacement(range(hubs), 2))
        for threads in range((3 * hubs + 1) // 2, (n - hubs) // 2 + 1):
            spare = n - hubs - 2 * threads
            for ends in itertools.combinations_with_replacement(slots, threads):
                if not _hubs_fit(hubs, ends):
                    continue
                for extra in itertools.combinations_with_replacement(range(threads), spare):
                    lengths = [2] * threads
                    for k in extra:
                        lengths[k] += 1
                    forms.add(canonical_form(_threaded(n, hubs, ends, lengths)))
    logger.debug(f"Built {len(forms)} connected critical classes on {n} vertices from threads")
    return sorted(forms)


# --- sharding ---

def _split(spec: EnumSpec, wanted: int, budget: Budget) -> Tuple[List[Node], List[Node]]:
    """Expands levels until the frontier holds at least ``wanted`` nodes."""
    above: List[Node] = []
    level = [_root(spec.n)]
    while len(level) < wanted:
        following = []
        for node in level:
            budget.tick_node()
            following.extend(_children(node, spec))
        if not following:
            break
        above.extend(level)
        level = following
    level.sort(key=lambda pair: pair[0])
    return above, level


def _slice(index: int, count: int, items: Sequence) -> Sequence:
    return items[index * len(items) // count:(index + 1) * len(items) // count]


def partition_work(spec: EnumSpec, shards: int, nodes_per_shard: int = 4, budget: Optional[Budget] = None) -> List[ShardSpec]:
    """
    Disjoint shards whose union is the full class stream. The frontier is expanded
    once here and each shard carries its own start nodes, so workers skip the split.
    """
    plain = [ShardSpec(index=i, count=shards, nodes_per_shard=nodes_per_shard) for i in range(shards)]
    if shards == 1 or _built_from_threads(spec) or spec.min_degree > spec.n - 1:
        return plain
    budget = budget or Budget()
    budget.admit(spec.n)
    above, frontier = _split(spec, shards * nodes_per_shard, budget)
    logger.debug(f"Split n={spec.n} delta={spec.min_degree}: {len(above)} nodes above a frontier of {len(frontier)}")
    return [
        shard.model_copy(update={
            "roots": tuple(form.bits for form, _ in _slice(shard.index, shards, frontier)),
            "above": tuple(form.bits for form, _ in above) if shard.index == 0 else (),
        })
        for shard in plain
    ]


def _walk(spec: EnumSpec, shard: Optional[ShardSpec], budget: Budget) -> Iterator[Node]:
    if spec.min_degree > spec.n - 1:
        return
    if _built_from_threads(spec):
        forms = thread_classes(spec.n)
        if shard is not None:
            forms = _slice(shard.index, shard.count, forms)
        for form in forms:
            budget.tick_node()
            yield _node(form)
        return
    if shard is None or shard.count == 1:
        yield from _depth_first(_root(spec.n), spec, budget)
        return
    if shard.roots is not None:
        above = [_node(CanonicalForm(spec.n, bits)) for bits in shard.above]
        starts: Iterable[Node] = (_node(CanonicalForm(spec.n, bits)) for bits in shard.roots)
    else:
        above, frontier = _split(spec, shard.count * shard.nodes_per_shard, budget)
        above = above if shard.index == 0 else []
        starts = _slice(shard.index, shard.count, frontier)
    logger.debug(f"Shard {shard.index}/{shard.count} walks {len(above)} nodes above the split and its frontier slice")
    yield from above
    for start in starts:
        yield from _depth_first(start, spec, budget)


def iter_classes(spec: EnumSpec, shard: Optional[ShardSpec] = None, budget: Optional[Budget] = None) -> Iterator[Graph]:
    """Depth-first stream of canonical representatives that pass every EnumSpec filter."""
    for _, g in iter_class_forms(spec, shard, budget):
        yield g


def iter_class_forms(spec: EnumSpec, shard: Optional[ShardSpec] = None, budget: Optional[Budget] = None) -> Iterator[Tuple[CanonicalForm, Graph]]:
    budget = budget or Budget()
    budget.admit(spec.n)
    for form, g in _walk(spec, shard, budget):
        if _accepts(spec, g):
            budget.tick_class()
            yield form, g
    budget.check_deadline()


def replay_classes(spec: EnumSpec, words: Sequence[int], budget: Optional[Budget] = None) -> Iterator[Graph]:
    """Streams a recorded class list under the same budget rules as a fresh enumeration."""
    budget = budget or Budget()
    budget.admit(spec.n)
    for bits in words:
        budget.tick_node()
        budget.tick_class()
        yield CanonicalForm(spec.n, bits).to_graph()
    budget.check_deadline()


def enumerate_classes(spec: EnumSpec, budget: Optional[Budget] = None) -> List[Graph]:
    """One canonical graph per isomorphism class, sorted by canonical form."""
    started = time.perf_counter()
    pairs = sorted(iter_class_forms(spec, budget=budget), key=lambda pair: pair[0])
    logger.info(f"Enumerated {len(pairs)} classes for {spec.model_dump()} in {time.perf_counter() - started:.2f}s")
    return [g for _, g in pairs]


def enumerate_count(spec: EnumSpec, budget: Optional[Budget] = None) -> int:
    return sum(1 for _ in iter_classes(spec, budget=budget))


def labeled_class_oracle(n: int, predicate: Callable[[Graph], bool]) -> List[CanonicalForm]:
    """Brute force over all 2^C(n,2) labeled graphs on n vertices, deduplicated by canonical form."""
    pairs = list(itertools.combinations(range(n), 2))
    forms = set()
    for mask in range(1 << len(pairs)):
        g = from_edge_list(n, [pair for k, pair in enumerate(pairs) if mask >> k & 1])
        if predicate(g):
            forms.add(canonical_form(g))
    return sorted(forms)
