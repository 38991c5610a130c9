# isetverify/services/kernels.py
"""
Per-class work done while scanning an enumeration, and the mergeable result
each shard returns. Kernels are looked up by name so worker payloads stay
picklable.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Set, Tuple

from ..errors import PreconditionError
from ..graphs import graph6
from ..graphs.counting import (
    count_by_subset_scan,
    easy_upper_bound,
    extremal_value,
    independence_vector,
)
from ..graphs.criticality import (
    decompose_critical_2,
    degree_partition,
    find_rewire_patterns,
    is_edge_critical,
    is_edge_critical_by_deletion,
    is_vertex_critical,
    is_vertex_critical_by_deletion,
    triangle_rewire,
)
from ..graphs.graph import Graph

MAX_RECORDED_VIOLATIONS = 100


def size_label(t) -> str:
    return "total" if t == "total" else f"t={t}"


@dataclass
class ShardResult:
    """What one shard saw. ``merge`` is associative and commutative."""
    classes: int = 0
    cases: int = 0
    maxima: Dict[str, int] = field(default_factory=dict)
    achievers: Dict[str, Set[str]] = field(default_factory=dict)
    violation_counts: Dict[str, int] = field(default_factory=dict)
    # (key, graph6, detail), the smallest MAX_RECORDED_VIOLATIONS per key
    violations: List[Tuple[str, str, str]] = field(default_factory=list)
    histogram: Dict[str, int] = field(default_factory=dict)

    def observe(self, key: str, value: int, g: Graph) -> None:
        best = self.maxima.get(key)
        if best is None or value > best:
            self.maxima[key] = value
            self.achievers[key] = {graph6.encode(g)}
        elif value == best:
            self.achievers[key].add(graph6.encode(g))

    def violate(self, key: str, g: Graph, detail: str) -> None:
        self.violation_counts[key] = self.violation_counts.get(key, 0) + 1
        self.violations.append((key, graph6.encode(g), detail))
        if len(self.violations) > 4 * MAX_RECORDED_VIOLATIONS:
            self.trim()

    def count(self, label: str, amount: int = 1) -> None:
        self.histogram[label] = self.histogram.get(label, 0) + amount

    def trim(self) -> None:
        kept: Dict[str, List[Tuple[str, str, str]]] = {}
        for item in sorted(set(self.violations)):
            bucket = kept.setdefault(item[0], [])
            if len(bucket) < MAX_RECORDED_VIOLATIONS:
                bucket.append(item)
        self.violations = [item for key in sorted(kept) for item in kept[key]]

    def merge(self, other: "ShardResult") -> "ShardResult":
        merged = ShardResult(
            classes=self.classes + other.classes,
            cases=self.cases + other.cases,
            maxima=dict(self.maxima),
            achievers={key: set(members) for key, members in self.achievers.items()},
            violation_counts=dict(self.violation_counts),
            violations=self.violations + other.violations,
            histogram=dict(self.histogram),
        )
        for key, value in other.maxima.items():
            best = merged.maxima.get(key)
            if best is None or value > best:
                merged.maxima[key] = value
                merged.achievers[key] = set(other.achievers[key])
            elif value == best:
                merged.achievers[key] |= other.achievers[key]
        for key, amount in other.violation_counts.items():
            merged.violation_counts[key] = merged.violation_counts.get(key, 0) + amount
        for label, amount in other.histogram.items():
            merged.count(label, amount)
        merged.trim()
        return merged

    def violations_for(self, key: str) -> List[Tuple[str, str]]:
        return [(g6, detail) for k, g6, detail in self.violations if k == key]


Kernel = Callable[[Graph, dict, ShardResult], None]


def max_counts(g: Graph, params: dict, acc: ShardResult) -> None:
    """Tracks the maximum of each requested i_t (and the total) with its achievers."""
    floor = params.get("min_max_degree")
    if floor is not None and g.max_degree() < floor:
        return
    acc.cases += 1
    vector = independence_vector(g)
    keys = list(params.get("sizes", []))
    if params.get("total"):
        keys.append("total")
    strict = params.get("strict", False)
    bounds = params.get("bounds", {})
    for t in keys:
        label = size_label(t)
        value = vector.total if t == "total" else vector[t]
        acc.observe(label, value, g)
        bound = bounds.get(label)
        if bound is None:
            continue
        if (value >= bound) if strict else (value > bound):
            acc.violate(label, g, f"{label}: {value} {'>=' if strict else '>'} {bound}")


def monotone_step(g: Graph, params: dict, acc: ShardResult) -> None:
    delta = params["delta"]
    n = g.n
    vector = independence_vector(g)
    for t in range(delta + 1, n):
        here, following = extremal_value(n, delta, t), extremal_value(n, delta, t + 1)
        if vector[t] <= here:
            acc.cases += 1
            if vector[t + 1] > following:
                acc.violate("step", g, f"i_{t} = {vector[t]} <= {here} but i_{t + 1} = {vector[t + 1]} > {following}")
        if t < n - delta and vector[t] < here:
            acc.cases += 1
            if vector[t + 1] >= following:
                acc.violate("strict", g, f"i_{t} = {vector[t]} < {here} but i_{t + 1} = {vector[t + 1]} >= {following}")


def deletion_identity(g: Graph, params: dict, acc: ShardResult) -> None:
    """i_t(G) = i_t(G - v) + i_{t-1}(G - N[v]) for every vertex and every t >= 1."""
    direct = [count_by_subset_scan(g, t) for t in range(g.n + 1)]
    for v in range(g.n):
        without = independence_vector(g.delete_vertex(v))
        closed = g.rows[v] | 1 << v
        outside = independence_vector(g.induced_subgraph(u for u in range(g.n) if not closed >> u & 1))
        for t in range(1, g.n + 1):
            acc.cases += 1
            if direct[t] != without[t] + outside[t - 1]:
                acc.violate("identity", g, f"v={v}, t={t}: {direct[t]} != {without[t]} + {outside[t - 1]}")


def easy_bound(g: Graph, params: dict, acc: ShardResult) -> None:
    delta = params["delta"]
    vector = independence_vector(g)
    for t in range(1, g.n - delta + 1):
        acc.cases += 1
        bound = easy_upper_bound(g.n, delta, t)
        if vector[t] > bound:
            acc.violate("bound", g, f"i_{t} = {vector[t]} > {bound}")


def edge_monotone(g: Graph, params: dict, acc: ShardResult) -> None:
    """Deleting an edge never lowers any i_t."""
    base = independence_vector(g)
    for u, v in g.edges():
        acc.cases += 1
        sparser = independence_vector(g.delete_edge(u, v))
        for t in range(len(base)):
            if sparser[t] < base[t]:
                acc.violate("monotone", g, f"deleting ({u}, {v}) lowers i_{t} from {base[t]} to {sparser[t]}")
                break


def regular_size3(g: Graph, params: dict, acc: ShardResult) -> None:
    delta = params["delta"]
    if g.max_degree() != delta or g.min_degree() != delta:
        return
    acc.cases += 1
    n = g.n
    value = independence_vector(g)[3]
    bound = extremal_value(n, delta, 3)
    acc.observe("t=3", value, g)
    if value > bound:
        acc.violate("bound", g, f"i_3 = {value} > {bound}")
    elif value == bound and n != 2 * delta:
        acc.violate("equality", g, f"i_3 = {bound} attained with n = {n} != 2 * delta")


def decompose(g: Graph, params: dict, acc: ShardResult) -> None:
    acc.cases += 1
    try:
        split = decompose_critical_2(g)
    except PreconditionError as e:
        acc.violate("decompose", g, e.detail)
        return
    acc.count(split.kind)
    if split.kind == "path_split" and split.v1 == split.v2:
        acc.count("shared_boundary")


def rewire(g: Graph, params: dict, acc: ShardResult) -> None:
    patterns = find_rewire_patterns(g)
    if not patterns:
        return
    acc.count("graphs_with_patterns")
    base = independence_vector(g)[3]
    degrees = g.degrees()
    for p in patterns:
        acc.cases += 1
        rewired = triangle_rewire(g, p)
        if rewired.degrees() != degrees:
            acc.violate("degrees", g, f"rewiring {p.vertices()} changes degrees")
        value = independence_vector(rewired)[3]
        if value < base:
            acc.violate("i_3", g, f"rewiring {p.vertices()} lowers i_3 from {base} to {value}")


def criticality_equivalence(g: Graph, params: dict, acc: ShardResult) -> None:
    delta = params["delta"]
    acc.cases += 1
    edge_critical = is_edge_critical(g, delta)
    vertex_critical = is_vertex_critical(g, delta)
    if edge_critical != is_edge_critical_by_deletion(g, delta):
        acc.violate("edge", g, f"degree test says {edge_critical}, deletion test disagrees")
    if vertex_critical != is_vertex_critical_by_deletion(g, delta):
        acc.violate("vertex", g, f"degree test says {vertex_critical}, deletion test disagrees")
    if edge_critical:
        acc.count("edge_critical")
        high = degree_partition(g, delta).above_delta
        for a, b in itertools.combinations(high, 2):
            if g.has_edge(a, b):
                acc.violate("independent", g, f"high-degree vertices {a} and {b} are adjacent")
    if vertex_critical:
        acc.count("vertex_critical")
    if edge_critical and vertex_critical:
        acc.count("critical")


def census(g: Graph, params: dict, acc: ShardResult) -> None:
    part = degree_partition(g, params["delta"])
    acc.cases += 1
    acc.count(f"h={part.h},l={part.ell}")
    acc.count("connected" if g.is_connected() else "disconnected")


KERNELS: Dict[str, Kernel] = {
    "max_counts": max_counts,
    "monotone_step": monotone_step,
    "deletion_identity": deletion_identity,
    "easy_bound": easy_bound,
    "edge_monotone": edge_monotone,
    "regular_size3": regular_size3,
    "decompose": decompose,
    "rewire": rewire,
    "criticality_equivalence": criticality_equivalence,
    "census": census,
}
