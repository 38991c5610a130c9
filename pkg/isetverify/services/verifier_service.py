# isetverify/services/verifier_service.py
"""
Exhaustive checks of extremal statements about i_t over graphs with a minimum
degree floor. Each check enumerates the classes it needs, runs a scan kernel
over them (see kernels.py) and turns the merged result into a report.
"""
import logging
import time
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from ..config import Settings, settings as default_settings
from ..errors import PreconditionError
from ..graphs import graph6
from ..graphs.canonical import canonical_form
from ..graphs.constructions import (
    complete_bipartite,
    conjecture_multipartite,
    conjecture_multipartite_parts,
    cycle,
    inside_edge_family,
)
from ..graphs.counting import extremal_value, independence_vector
from ..graphs.graph import Graph
from ..models.graph_specs import EnumSpec
from ..models.report import (
    AnyReport,
    EqualityClassReport,
    ExplorationReport,
    ScanSpec,
    StepCheckReport,
    VerificationReport,
    Violation,
)
from ..models.suite import Expectation, Status
from ..worker import run_scan
from .kernels import ShardResult, deletion_identity, size_label

logger = logging.getLogger(__name__)

COUNTEREXAMPLE = "counterexample"


# --- helpers ---

def _require_family(n: int, delta: int) -> None:
    if delta < 0 or n < delta + 1:
        raise PreconditionError(f"need n >= delta + 1 and delta >= 0, got n={n}, delta={delta}")


def _canonical_g6(g: Graph) -> str:
    return canonical_form(g).graph6()


def _recheck_achievers(achievers: Sequence[str], t: Union[int, str], observed: Optional[int]) -> None:
    """Every achiever, decoded again, must reproduce the reported maximum."""
    for g6 in achievers:
        vector = independence_vector(graph6.decode(g6))
        value = vector.total if t == "total" else vector[t]
        if value != observed:
            raise RuntimeError(f"achiever {g6} has {size_label(t)} = {value}, reported maximum is {observed}")


def _elapsed(started: float) -> float:
    return round(time.perf_counter() - started, 6)


def _log_verdict(report: AnyReport) -> None:
    if report.verdict == "violated":
        logger.warning(f"{report.check} {report.spec.model_dump(exclude_none=True)}: violated")
    else:
        logger.info(f"{report.check} {report.spec.model_dump(exclude_none=True)}: {report.verdict} "
                    f"({report.classes_scanned} classes, {report.runtime_seconds:.2f}s)")


def _verification_report(
    check: str,
    spec: ScanSpec,
    result: ShardResult,
    t: Union[int, str],
    reference: int,
    started: float,
    comparison: str = "le",
    conjecture: bool = False,
    note: Optional[str] = None,
    predicted: Optional[Sequence[Graph]] = None,
) -> VerificationReport:
    label = size_label(t)
    observed = result.maxima.get(label)
    achievers = sorted(result.achievers.get(label, ()))
    _recheck_achievers(achievers, t, observed)
    exceeded = result.violation_counts.get(label, 0) > 0
    expected = None if predicted is None else sorted({_canonical_g6(g) for g in predicted})
    matches = None if expected is None else expected == achievers
    violated = exceeded or matches is False
    report = VerificationReport(
        check=check,
        spec=spec,
        extremal_value=reference,
        observed_max=observed,
        comparison=comparison,
        verdict="violated" if violated else "holds",
        achievers=achievers,
        counterexamples=sorted(g6 for g6, _ in result.violations_for(label)),
        counterexample_count=result.violation_counts.get(label, 0),
        classes_scanned=result.classes,
        runtime_seconds=_elapsed(started),
        vacuous=result.cases == 0,
        predicted_achievers=expected,
        achievers_match=matches,
        note=note,
    )
    if matches is False:
        logger.warning(f"{check} at {spec.model_dump(exclude_none=True)}: achievers {achievers} differ from predicted {expected}")
    if exceeded and conjecture:
        report.finding = COUNTEREXAMPLE
        logger.warning(f"Counterexample to {check} at {spec.model_dump(exclude_none=True)}: {report.counterexamples[:5]}")
    _log_verdict(report)
    return report


def _step_report(check: str, spec: ScanSpec, result: ShardResult, started: float, note: Optional[str] = None) -> StepCheckReport:
    violations = sorted(result.violations, key=lambda item: (item[1], item[0], item[2]))
    count = sum(result.violation_counts.values())
    report = StepCheckReport(
        check=check,
        spec=spec,
        verdict="violated" if count else "holds",
        cases_checked=result.cases,
        violations=[Violation(graph6=g6, detail=f"{key}: {detail}") for key, g6, detail in violations],
        violation_count=count,
        histogram=dict(sorted(result.histogram.items())),
        vacuous=result.cases == 0,
        classes_scanned=result.classes,
        runtime_seconds=_elapsed(started),
        note=note,
    )
    _log_verdict(report)
    return report


# --- fixed-size maximum ---

def check_size_t(n: int, delta: int, t: int, settings: Optional[Settings] = None) -> VerificationReport:
    """Max of i_t over every class with minimum degree >= delta, against i_t(K_{delta,n-delta})."""
    settings = settings or default_settings
    _require_family(n, delta)
    if t < 0:
        raise PreconditionError(f"independent-set size must be nonnegative, got {t}")
    reference = extremal_value(n, delta, t)
    label = size_label(t)
    logger.info(f"Checking i_{t} <= {reference} over graphs on {n} vertices with minimum degree >= {delta}")
    started = time.perf_counter()
    result = run_scan("max_counts", EnumSpec(n=n, min_degree=delta), {"sizes": [t], "bounds": {label: reference}}, settings)
    return _verification_report("size_t", ScanSpec(n=n, delta=delta, t=t), result, t, reference, started)


def check_t2_violation(n: int, delta: int, settings: Optional[Settings] = None) -> VerificationReport:
    """The size-2 case, where sparse graphs beat K_{delta,n-delta}; expected to be violated."""
    report = check_size_t(n, delta, 2, settings)
    report.check = "t2"
    report.note = "i_2 counts non-edges, so any graph with fewer edges than K_{delta,n-delta} wins"
    return report


def predicted_family(n: int, delta: int, t: int) -> Optional[Tuple[str, List[Graph]]]:
    """The equality family a known theorem gives for (n, delta, t), or None outside every proven regime."""
    if delta == 2 and n >= 5 and 3 <= t <= n - 2:
        return "delta=2, 3<=t<=n-2", inside_edge_family(n, 2)
    if delta == 3 and n >= 6 and t == 3:
        return "delta=3, t=3", [complete_bipartite(3, n - 3)]
    if delta == 3 and n >= 7 and 4 <= t <= n - 3:
        return "delta=3, 4<=t<=n-3", inside_edge_family(n, 3)
    if delta >= 3 and n >= 3 * delta + 1 and 2 * delta + 1 <= t <= n - delta:
        return "delta>=3, 2*delta+1<=t<=n-delta", inside_edge_family(n, delta)
    return None


def predicted_sizes(n: int, delta: int) -> List[int]:
    """Every t for which predicted_family(n, delta, t) has an answer."""
    return [t for t in range(n + 1) if predicted_family(n, delta, t) is not None]


def check_equality_class(n: int, delta: int, t: int, settings: Optional[Settings] = None) -> EqualityClassReport:
    """Compares the achievers of max i_t with the predicted equality family, as canonical forms."""
    settings = settings or default_settings
    _require_family(n, delta)
    started = time.perf_counter()
    result = run_scan("max_counts", EnumSpec(n=n, min_degree=delta), {"sizes": [t]}, settings)
    return _equality_report(n, delta, t, result, started)


def check_equality_range(n: int, delta: int, settings: Optional[Settings] = None) -> List[EqualityClassReport]:
    """check_equality_class for every predicted t of (n, delta), from a single scan."""
    settings = settings or default_settings
    _require_family(n, delta)
    sizes = predicted_sizes(n, delta)
    if not sizes:
        raise PreconditionError(f"no equality family is known for n={n}, delta={delta}")
    started = time.perf_counter()
    result = run_scan("max_counts", EnumSpec(n=n, min_degree=delta), {"sizes": sizes}, settings)
    return [_equality_report(n, delta, t, result, started) for t in sizes]


def _equality_report(n: int, delta: int, t: int, result: ShardResult, started: float) -> EqualityClassReport:
    reference = extremal_value(n, delta, t)
    label = size_label(t)
    observed_max = result.maxima.get(label)
    observed = sorted(result.achievers.get(label, ()))
    _recheck_achievers(observed, t, observed_max)

    prediction = predicted_family(n, delta, t)
    if prediction is None:
        regime, predicted, status = None, [], "no_prediction"
        missing, unexpected = [], []
    else:
        regime, family = prediction
        predicted = sorted({_canonical_g6(g) for g in family})
        missing = sorted(set(predicted) - set(observed))
        unexpected = sorted(set(observed) - set(predicted))
        status = "mismatch" if missing or unexpected else "match"

    report = EqualityClassReport(
        check="equality",
        spec=ScanSpec(n=n, delta=delta, t=t),
        status=status,
        regime=regime,
        extremal_value=reference,
        observed_max=observed_max,
        predicted=predicted,
        observed=observed,
        missing=missing,
        unexpected=unexpected,
        verdict="violated" if status == "mismatch" else "holds",
        classes_scanned=result.classes,
        runtime_seconds=_elapsed(started),
    )
    _log_verdict(report)
    return report


def check_vertex_critical_strict(n: int, delta: int, t: int, settings: Optional[Settings] = None) -> VerificationReport:
    """Strict inequality over vertex-critical classes of minimum degree exactly delta."""
    settings = settings or default_settings
    _require_family(n, delta)
    if delta < 3 or t < delta + 1:
        raise PreconditionError(f"need delta >= 3 and t >= delta + 1, got delta={delta}, t={t}")
    reference = extremal_value(n, delta, t)
    label = size_label(t)
    proven = 5 * n >= 16 * delta or (delta == 3 and t == 4 and n >= 8)
    started = time.perf_counter()
    spec = EnumSpec(n=n, min_degree=delta, exact_min_degree=True, vertex_critical_only=True)
    result = run_scan("max_counts", spec, {"sizes": [t], "bounds": {label: reference}, "strict": True}, settings)
    return _verification_report(
        "vertex_critical", ScanSpec(n=n, delta=delta, t=t), result, t, reference, started,
        comparison="lt",
        note=None if proven else "outside the range where strictness is proven; exploratory",
    )


def check_no_high_degree_equality(n: int, settings: Optional[Settings] = None) -> VerificationReport:
    """Critical minimum-degree-3 classes with a vertex of degree >= n-3 stay strictly below i_3(K_{3,n-3})."""
    settings = settings or default_settings
    _require_family(n, 3)
    reference = extremal_value(n, 3, 3)
    started = time.perf_counter()
    spec = EnumSpec(n=n, min_degree=3, exact_min_degree=True, critical_only=True)
    params = {"sizes": [3], "bounds": {"t=3": reference}, "strict": True, "min_max_degree": n - 3}
    result = run_scan("max_counts", spec, params, settings)
    note = None if result.cases else "no critical class has a vertex of degree >= n-3; holds vacuously"
    return _verification_report("high_degree", ScanSpec(n=n, delta=3, t=3), result, 3, reference, started,
                                comparison="lt", note=note)


# --- totals ---

def predicted_total_family(n: int, delta: int) -> Optional[List[Graph]]:
    """
    The classes attaining max i(G) where this is proven: K_{2,n-2} alone at
    delta = 2, except n = 5 where C_5 ties it. None elsewhere.
    """
    if delta != 2 or n < 4:
        return None
    if n == 5:
        return [cycle(5), complete_bipartite(2, 3)]
    return [complete_bipartite(2, n - 2)]


def check_total_count(n: int, delta: int, settings: Optional[Settings] = None) -> VerificationReport:
    """
    Max of i(G) against the complete multipartite graph with parts n-delta, ..., n-delta, x.
    Where the achievers are known, the achiever set must match them exactly.
    """
    settings = settings or default_settings
    _require_family(n, delta)
    parts = conjecture_multipartite_parts(n, delta)
    reference = independence_vector(conjecture_multipartite(n, delta)).total
    predicted = predicted_total_family(n, delta)
    started = time.perf_counter()
    result = run_scan("max_counts", EnumSpec(n=n, min_degree=delta), {"total": True, "bounds": {"total": reference}}, settings)
    return _verification_report(
        "total", ScanSpec(n=n, delta=delta, t="total"), result, "total", reference, started,
        conjecture=predicted is None, note=f"reference: complete multipartite with parts {parts}",
        predicted=predicted,
    )


def check_strong_conjecture(n: int, delta: int, settings: Optional[Settings] = None) -> List[VerificationReport]:
    """One report per 3 <= t <= n; a violation is flagged as a counterexample."""
    settings = settings or default_settings
    _require_family(n, delta)
    if delta < 1 or n < 2 * delta:
        raise PreconditionError(f"need delta >= 1 and n >= 2 * delta, got n={n}, delta={delta}")
    sizes = list(range(3, n + 1))
    bounds = {size_label(t): extremal_value(n, delta, t) for t in sizes}
    started = time.perf_counter()
    result = run_scan("max_counts", EnumSpec(n=n, min_degree=delta), {"sizes": sizes, "bounds": bounds}, settings)
    return [
        _verification_report("strong", ScanSpec(n=n, delta=delta, t=t), result, t, bounds[size_label(t)], started,
                             conjecture=True)
        for t in sizes
    ]


def explore_fixed_size(n: int, delta: int, t: int, settings: Optional[Settings] = None) -> ExplorationReport:
    """Who maximises i_t when no theorem says; flags the two candidate constructions."""
    settings = settings or default_settings
    _require_family(n, delta)
    label = size_label(t)
    started = time.perf_counter()
    result = run_scan("max_counts", EnumSpec(n=n, min_degree=delta), {"sizes": [t]}, settings)
    achievers = sorted(result.achievers.get(label, ()))
    observed = result.maxima.get(label)
    _recheck_achievers(achievers, t, observed)
    members = set(achievers)
    report = ExplorationReport(
        check="explore",
        spec=ScanSpec(n=n, delta=delta, t=t),
        verdict="holds",
        observed_max=observed,
        achievers=achievers,
        contains={
            "complete_bipartite": _canonical_g6(complete_bipartite(delta, n - delta)) in members,
            "conjecture_multipartite": _canonical_g6(conjecture_multipartite(n, delta)) in members,
        },
        classes_scanned=result.classes,
        runtime_seconds=_elapsed(started),
    )
    _log_verdict(report)
    return report


def check_divisible_multipartite(n: int, delta: int, settings: Optional[Settings] = None) -> StepCheckReport:
    """When (n - delta) divides n, the balanced complete multipartite graph dominates every i_t and the total."""
    settings = settings or default_settings
    _require_family(n, delta)
    if n % (n - delta):
        raise PreconditionError(f"n - delta = {n - delta} does not divide n = {n}")
    reference = independence_vector(conjecture_multipartite(n, delta))
    sizes = list(range(1, n - delta + 1))
    bounds = {size_label(t): reference[t] for t in sizes}
    bounds["total"] = reference.total
    started = time.perf_counter()
    result = run_scan("max_counts", EnumSpec(n=n, min_degree=delta), {"sizes": sizes, "total": True, "bounds": bounds}, settings)
    return _step_report("divisible", ScanSpec(n=n, delta=delta), result, started,
                        note=f"reference: {n // (n - delta)} parts of size {n - delta}")


# --- per-graph statements ---

def check_monotone_step(n: int, delta: int, settings: Optional[Settings] = None) -> StepCheckReport:
    """i_t <= reference implies i_{t+1} <= reference for t >= delta+1, plus the strict version below n - delta."""
    settings = settings or default_settings
    _require_family(n, delta)
    if delta < 2:
        raise PreconditionError(f"monotone step needs delta >= 2, got {delta}")
    started = time.perf_counter()
    result = run_scan("monotone_step", EnumSpec(n=n, min_degree=delta), {"delta": delta}, settings)
    return _step_report("monotone", ScanSpec(n=n, delta=delta), result, started)


def check_deletion_identity(n: int, delta: int = 0, settings: Optional[Settings] = None) -> StepCheckReport:
    settings = settings or default_settings
    _require_family(n, delta)
    started = time.perf_counter()
    result = run_scan("deletion_identity", EnumSpec(n=n, min_degree=delta), {}, settings)
    return _step_report("deletion", ScanSpec(n=n, delta=delta), result, started)


def deletion_identity_violations(g: Graph) -> List[str]:
    """The vertex-deletion recurrence checked on a single graph; empty when it holds everywhere."""
    acc = ShardResult()
    deletion_identity(g, {}, acc)
    return [detail for _, _, detail in acc.violations]


def check_regular_size3(n: int, delta: int, settings: Optional[Settings] = None) -> StepCheckReport:
    """delta-regular classes have i_3 <= C(n-delta,3) + C(delta,3), with equality only at n = 2*delta."""
    settings = settings or default_settings
    _require_family(n, delta)
    if delta < 1 or n < 2 * delta:
        raise PreconditionError(f"need delta >= 1 and n >= 2 * delta, got n={n}, delta={delta}")
    started = time.perf_counter()
    spec = EnumSpec(n=n, min_degree=delta, exact_min_degree=True)
    result = run_scan("regular_size3", spec, {"delta": delta}, settings)
    note = None if result.cases else f"no {delta}-regular graph on {n} vertices"
    return _step_report("regular3", ScanSpec(n=n, delta=delta, t=3), result, started, note=note)


def check_easy_upper_bound(n: int, delta: int, settings: Optional[Settings] = None) -> StepCheckReport:
    """i_t <= n (n-delta-1) ... (n-delta-t+1) / t! for 1 <= t <= n - delta."""
    settings = settings or default_settings
    _require_family(n, delta)
    started = time.perf_counter()
    result = run_scan("easy_bound", EnumSpec(n=n, min_degree=delta), {"delta": delta}, settings)
    return _step_report("easy_bound", ScanSpec(n=n, delta=delta), result, started)


def check_edge_monotonicity(n: int, delta: int, settings: Optional[Settings] = None) -> StepCheckReport:
    settings = settings or default_settings
    _require_family(n, delta)
    started = time.perf_counter()
    result = run_scan("edge_monotone", EnumSpec(n=n, min_degree=delta), {}, settings)
    return _step_report("edge_monotone", ScanSpec(n=n, delta=delta), result, started)


def check_decompositions(n: int, settings: Optional[Settings] = None) -> StepCheckReport:
    """Every connected critical class with minimum degree 2 splits into a cycle or a verified path split."""
    settings = settings or default_settings
    _require_family(n, 2)
    started = time.perf_counter()
    spec = EnumSpec(n=n, min_degree=2, exact_min_degree=True, connected_only=True, critical_only=True)
    result = run_scan("decompose", spec, {}, settings)
    return _step_report("decompose", ScanSpec(n=n, delta=2), result, started)


def check_rewiring(n: int, settings: Optional[Settings] = None) -> StepCheckReport:
    """Every triangle-rewiring pattern in a critical minimum-degree-3 class keeps degrees and does not lower i_3."""
    settings = settings or default_settings
    _require_family(n, 3)
    started = time.perf_counter()
    spec = EnumSpec(n=n, min_degree=3, exact_min_degree=True, critical_only=True)
    result = run_scan("rewire", spec, {}, settings)
    note = None if result.cases else "no rewiring pattern occurs"
    return _step_report("rewire", ScanSpec(n=n, delta=3, t=3), result, started, note=note)


def check_criticality_equivalence(n: int, delta: int, settings: Optional[Settings] = None) -> StepCheckReport:
    """Degree-based and deletion-based criticality agree; high-degree vertices of edge-critical classes are independent."""
    settings = settings or default_settings
    _require_family(n, delta)
    if delta < 1:
        raise PreconditionError(f"criticality needs delta >= 1, got {delta}")
    started = time.perf_counter()
    spec = EnumSpec(n=n, min_degree=delta, exact_min_degree=True)
    result = run_scan("criticality_equivalence", spec, {"delta": delta}, settings)
    return _step_report("criticality_equivalence", ScanSpec(n=n, delta=delta), result, started)


def critical_census(n: int, delta: int, settings: Optional[Settings] = None) -> ExplorationReport:
    """Critical classes counted by (h, l) = (|V_{>delta}|, |V_{=delta}|)."""
    settings = settings or default_settings
    _require_family(n, delta)
    if delta < 1:
        raise PreconditionError(f"criticality needs delta >= 1, got {delta}")
    started = time.perf_counter()
    spec = EnumSpec(n=n, min_degree=delta, exact_min_degree=True, critical_only=True)
    result = run_scan("census", spec, {"delta": delta}, settings)
    report = ExplorationReport(
        check="census",
        spec=ScanSpec(n=n, delta=delta),
        verdict="holds",
        histogram=dict(sorted(result.histogram.items())),
        classes_scanned=result.classes,
        runtime_seconds=_elapsed(started),
    )
    _log_verdict(report)
    return report


# --- registry ---

CheckFunction = Callable[..., Union[AnyReport, List[AnyReport]]]

CHECKS: Dict[str, Tuple[CheckFunction, Tuple[str, ...]]] = {
    "size_t": (check_size_t, ("n", "delta", "t")),
    "t2": (check_t2_violation, ("n", "delta")),
    "equality": (check_equality_class, ("n", "delta", "t")),
    "equality_range": (check_equality_range, ("n", "delta")),
    "vertex_critical": (check_vertex_critical_strict, ("n", "delta", "t")),
    "high_degree": (check_no_high_degree_equality, ("n",)),
    "total": (check_total_count, ("n", "delta")),
    "monotone": (check_monotone_step, ("n", "delta")),
    "deletion": (check_deletion_identity, ("n", "delta")),
    "strong": (check_strong_conjecture, ("n", "delta")),
    "explore": (explore_fixed_size, ("n", "delta", "t")),
    "divisible": (check_divisible_multipartite, ("n", "delta")),
    "regular3": (check_regular_size3, ("n", "delta")),
    "easy_bound": (check_easy_upper_bound, ("n", "delta")),
    "edge_monotone": (check_edge_monotonicity, ("n", "delta")),
    "decompose": (check_decompositions, ("n",)),
    "rewire": (check_rewiring, ("n",)),
    "criticality_equivalence": (check_criticality_equivalence, ("n", "delta")),
    "census": (critical_census, ("n", "delta")),
}

DEFAULT_EXPECT: Dict[str, Expectation] = {
    "t2": "violated",
    "total": "conjecture",
    "strong": "conjecture",
    "explore": "any",
    "census": "any",
}


def run_check(name: str, params: Dict[str, Union[int, str]], settings: Optional[Settings] = None) -> List[AnyReport]:
    """Runs a registered check by name; parameters must match its signature exactly."""
    entry = CHECKS.get(name)
    if entry is None:
        raise PreconditionError(f"unknown check '{name}'; known: {', '.join(sorted(CHECKS))}")
    function, required = entry
    missing = [key for key in required if key not in params]
    extra = [key for key in params if key not in required]
    if missing or extra:
        raise PreconditionError(f"check '{name}' takes {', '.join(required)}; missing {missing}, unexpected {extra}")
    try:
        kwargs = {key: int(params[key]) for key in required}
    except (TypeError, ValueError) as e:
        raise PreconditionError(f"check '{name}' needs integer parameters: {e}") from e
    reports = function(**kwargs, settings=settings)
    return reports if isinstance(reports, list) else [reports]


def evaluate(reports: Sequence[AnyReport], expect: Expectation) -> Status:
    """
    'holds' and 'violated' must match every verdict; 'any' always passes;
    'conjecture' passes but turns a violation into a finding.
    """
    verdicts = {report.verdict for report in reports}
    if expect == "any":
        return "passed"
    if expect == "conjecture":
        if "violated" in verdicts:
            for report in reports:
                if report.verdict == "violated":
                    report.finding = COUNTEREXAMPLE
            return "finding"
        return "passed"
    if expect == "violated":
        return "passed" if verdicts and verdicts <= {"violated"} else "failed"
    return "passed" if verdicts <= {"holds"} else "failed"
