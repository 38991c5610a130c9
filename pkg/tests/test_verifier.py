# tests/test_verifier.py
import pytest

from isetverify.errors import BudgetExceededError, PreconditionError
from isetverify.graphs.canonical import canonical_form
from isetverify.graphs.constructions import complete_bipartite, cycle, disjoint_union
from isetverify.models.report import ScanSpec, VerificationReport
from isetverify.services import verifier_service
from isetverify.services.verifier_service import (
    DEFAULT_EXPECT,
    check_criticality_equivalence,
    check_decompositions,
    check_deletion_identity,
    check_divisible_multipartite,
    check_easy_upper_bound,
    check_edge_monotonicity,
    check_equality_class,
    check_equality_range,
    check_monotone_step,
    check_no_high_degree_equality,
    check_regular_size3,
    check_rewiring,
    check_size_t,
    check_strong_conjecture,
    check_t2_violation,
    check_total_count,
    check_vertex_critical_strict,
    critical_census,
    deletion_identity_violations,
    evaluate,
    explore_fixed_size,
    predicted_family,
    predicted_sizes,
    predicted_total_family,
    run_check,
)


def g6(g):
    return canonical_form(g).graph6()


def test_size_three_on_five_vertices(settings):
    report = check_size_t(5, 2, 3, settings)
    assert report.verdict == "holds"
    assert report.extremal_value == 1
    assert report.observed_max == 1
    assert report.achievers == ["DFw", "DF{"]
    assert report.counterexamples == []
    assert report.classes_scanned == 11


def test_size_three_with_delta_three(settings):
    report = check_size_t(6, 3, 3, settings)
    assert report.verdict == "holds"
    assert report.achievers == [g6(complete_bipartite(3, 3))]


def test_size_two_is_violated(settings):
    report = check_size_t(6, 2, 2, settings)
    assert report.verdict == "violated"
    assert report.extremal_value == 7
    assert report.observed_max == 9
    assert sorted(report.achievers) == sorted([g6(cycle(6)), g6(disjoint_union(cycle(3), cycle(3)))])
    assert g6(cycle(6)) in report.counterexamples
    assert report.counterexample_count == len(report.counterexamples)


def test_t2_alias_expects_a_violation(settings):
    report = check_t2_violation(6, 2, settings)
    assert report.check == "t2"
    assert report.verdict == "violated"
    assert evaluate([report], DEFAULT_EXPECT["t2"]) == "passed"


@pytest.mark.parametrize("n, delta, t, size", [(7, 3, 4, 4), (7, 2, 4, 2), (6, 3, 3, 1), (6, 2, 3, 2)])
def test_equality_classes_match_the_predicted_family(settings, n, delta, t, size):
    report = check_equality_class(n, delta, t, settings)
    assert report.status == "match"
    assert len(report.predicted) == size
    assert report.observed == report.predicted
    assert report.verdict == "holds"


def test_equality_range_uses_one_scan(settings, monkeypatch):
    scans = []
    real = verifier_service.run_scan
    monkeypatch.setattr(verifier_service, "run_scan", lambda *args: scans.append(args) or real(*args))
    reports = check_equality_range(7, 2, settings)
    assert len(scans) == 1
    assert [r.spec.t for r in reports] == [3, 4, 5]
    assert all(r.status == "match" for r in reports)
    single = check_equality_class(7, 2, 4, settings)
    assert reports[1].observed == single.observed
    assert reports[1].observed_max == single.observed_max


def test_predicted_sizes():
    assert predicted_sizes(9, 2) == [3, 4, 5, 6, 7]
    assert predicted_sizes(9, 3) == [3, 4, 5, 6]
    assert predicted_sizes(5, 3) == []
    with pytest.raises(PreconditionError):
        check_equality_range(5, 3)


def test_no_prediction_outside_the_proven_regimes(settings):
    report = check_equality_class(7, 3, 7, settings)
    assert report.status == "no_prediction"
    assert report.observed_max == 0
    assert report.predicted == []
    assert predicted_family(6, 3, 4) is None


def test_totals_with_delta_two(settings):
    report = check_total_count(5, 2, settings)
    assert report.verdict == "holds"
    assert report.observed_max == 11
    assert sorted(report.achievers) == sorted([g6(cycle(5)), g6(complete_bipartite(2, 3))])
    report = check_total_count(6, 2, settings)
    assert report.achievers == [g6(complete_bipartite(2, 4))]
    assert report.finding is None


@pytest.mark.parametrize("n", [4, 6, 7])
def test_total_achiever_with_delta_two_is_unique(settings, n):
    report = check_total_count(n, 2, settings)
    assert report.verdict == "holds"
    assert report.predicted_achievers == [g6(complete_bipartite(2, n - 2))]
    assert report.achievers == report.predicted_achievers
    assert report.achievers_match is True


def test_total_achievers_at_five_vertices_are_predicted(settings):
    report = check_total_count(5, 2, settings)
    assert report.predicted_achievers == sorted([g6(cycle(5)), g6(complete_bipartite(2, 3))])
    assert report.achievers_match is True
    assert predicted_total_family(3, 2) is None
    assert predicted_total_family(6, 3) is None
    assert check_total_count(5, 3, settings).predicted_achievers is None


def test_extra_total_achiever_breaks_the_verdict(settings, monkeypatch):
    monkeypatch.setattr(verifier_service, "predicted_total_family", lambda n, delta: [complete_bipartite(2, 3)])
    report = check_total_count(5, 2, settings)
    assert report.counterexample_count == 0
    assert report.achievers_match is False
    assert report.verdict == "violated"
    assert report.finding is None


def test_total_below_twice_delta(settings):
    report = check_total_count(5, 3, settings)
    assert report.extremal_value == 8
    assert report.observed_max == 8
    assert report.verdict == "holds"


def test_strong_conjecture_reports_each_size(settings):
    reports = check_strong_conjecture(6, 3, settings)
    assert [r.spec.t for r in reports] == [3, 4, 5, 6]
    assert all(r.verdict == "holds" for r in reports)
    with pytest.raises(PreconditionError):
        check_strong_conjecture(5, 3, settings)


def test_explore_flags_the_multipartite_achiever(settings):
    report = explore_fixed_size(5, 3, 2, settings)
    assert report.observed_max == 2
    assert report.contains == {"complete_bipartite": False, "conjecture_multipartite": True}


def test_divisible_multipartite(settings):
    report = check_divisible_multipartite(4, 2, settings)
    assert report.verdict == "holds"
    with pytest.raises(PreconditionError):
        check_divisible_multipartite(7, 3, settings)


def test_regular_graphs_of_size_three(settings):
    report = check_regular_size3(6, 3, settings)
    assert report.verdict == "holds"
    assert report.cases_checked == 2
    odd = check_regular_size3(7, 3, settings)
    assert odd.vacuous and odd.verdict == "holds"


@pytest.mark.parametrize("check, args, nonempty", [
    (check_monotone_step, (6, 2), True),
    (check_monotone_step, (6, 3), True),
    (check_deletion_identity, (5, 0), True),
    (check_easy_upper_bound, (6, 2), True),
    (check_edge_monotonicity, (5, 0), True),
    (check_criticality_equivalence, (6, 2), True),
    (check_decompositions, (7,), True),
    (check_rewiring, (7,), False),
    (check_no_high_degree_equality, (7,), False),
])
def test_per_graph_statements_hold(settings, check, args, nonempty):
    report = check(*args, settings=settings)
    assert report.verdict == "holds"
    if nonempty:
        assert report.classes_scanned > 0


def test_decomposition_histogram(settings):
    report = check_decompositions(7, settings)
    assert report.histogram["cycle"] >= 1
    assert report.cases_checked == report.classes_scanned


def test_census_counts_every_class(settings):
    report = critical_census(6, 2, settings)
    assert report.histogram.get("connected", 0) + report.histogram.get("disconnected", 0) == report.classes_scanned
    assert report.histogram["connected"] >= 1


def test_deletion_identity_on_one_graph():
    assert deletion_identity_violations(complete_bipartite(3, 4)) == []


def test_preconditions(settings):
    with pytest.raises(PreconditionError):
        check_monotone_step(6, 1, settings)
    with pytest.raises(PreconditionError):
        check_vertex_critical_strict(6, 2, 3, settings)
    with pytest.raises(PreconditionError):
        check_size_t(3, 3, 2, settings)


def test_budget_aborts_the_check(settings):
    with pytest.raises(BudgetExceededError):
        check_size_t(6, 2, 3, settings.model_copy(update={"max_classes": 1}))
    with pytest.raises(BudgetExceededError):
        check_size_t(10, 3, 4, settings)


def test_parallel_scan_matches_serial(settings):
    serial = check_size_t(7, 2, 3, settings)
    parallel = check_size_t(7, 2, 3, settings.model_copy(update={"jobs": 2}))
    assert parallel.model_dump(exclude={"runtime_seconds"}) == serial.model_dump(exclude={"runtime_seconds"})


def test_run_check_by_name(settings):
    (report,) = run_check("size_t", {"n": 5, "delta": 2, "t": 3}, settings)
    assert report.verdict == "holds"
    assert len(run_check("strong", {"n": 6, "delta": 3}, settings)) == 4
    with pytest.raises(PreconditionError):
        run_check("nope", {}, settings)
    with pytest.raises(PreconditionError):
        run_check("size_t", {"n": 5}, settings)
    with pytest.raises(PreconditionError):
        run_check("decompose", {"n": 5, "delta": 2}, settings)
    assert set(verifier_service.CHECKS) >= {"size_t", "equality", "total", "strong", "census"}


def test_evaluate():
    holds = VerificationReport(check="total", spec=ScanSpec(n=5, delta=2, t="total"), verdict="holds", extremal_value=11)
    violated = VerificationReport(check="total", spec=ScanSpec(n=5, delta=2, t="total"), verdict="violated", extremal_value=11)
    assert evaluate([holds], "holds") == "passed"
    assert evaluate([violated], "holds") == "failed"
    assert evaluate([holds], "violated") == "failed"
    assert evaluate([holds, violated], "any") == "passed"
    assert evaluate([holds, violated], "conjecture") == "finding"
    assert violated.finding == "counterexample"
    assert holds.finding is None


@pytest.mark.slow
def test_vertex_critical_strictness_on_eight_vertices(settings):
    report = check_vertex_critical_strict(8, 3, 4, settings)
    assert report.verdict == "holds"
    assert report.comparison == "lt"
    assert report.note is None
    assert report.observed_max is None or report.observed_max < 5


@pytest.mark.slow
@pytest.mark.parametrize("n", [8, 9])
def test_size_t_equality_with_delta_two(settings, n):
    for t in range(3, n - 1):
        assert check_equality_class(n, 2, t, settings).status == "match"


@pytest.mark.slow
@pytest.mark.parametrize("n", [8, 9])
def test_size_t_equality_with_delta_three(settings, n):
    reports = check_equality_range(n, 3, settings)
    assert [r.spec.t for r in reports] == list(range(3, n - 2))
    assert all(r.status == "match" for r in reports)


@pytest.mark.slow
@pytest.mark.parametrize("n", [8, 9])
def test_total_achiever_with_delta_two_on_larger_graphs(settings, n):
    report = check_total_count(n, 2, settings)
    assert report.achievers == [g6(complete_bipartite(2, n - 2))]
    assert report.verdict == "holds"


@pytest.mark.slow
def test_rewiring_on_nine_vertices(settings):
    assert check_rewiring(9, settings).verdict == "holds"


def test_decompositions_on_ten_vertices(settings):
    with pytest.raises(BudgetExceededError):
        check_decompositions(10, settings)
    report = check_decompositions(10, settings.model_copy(update={"allow_n10": True}))
    assert report.verdict == "holds"
    assert report.classes_scanned > 0
    assert report.histogram["cycle"] == 1
