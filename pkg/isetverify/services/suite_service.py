# isetverify/services/suite_service.py
import itertools
import logging
import time
from pathlib import Path
from typing import Dict, List, Optional, Union

from pydantic import ValidationError

from ..config import Settings, settings as default_settings
from ..errors import (
    EXIT_BUDGET,
    EXIT_OK,
    EXIT_VERIFICATION_FAILED,
    BudgetExceededError,
    PreconditionError,
    ToolkitError,
)
from ..models.suite import CheckEntry, SuiteConfig, SuiteOutcome, SuiteReport
from ..report_store import SUMMARY_JSON, report_file_name, write_report, write_summary_csv
from .verifier_service import DEFAULT_EXPECT, evaluate, run_check

logger = logging.getLogger(__name__)

DEFAULT_SUITE = Path(__file__).resolve().parent.parent / "data" / "default_suite.json"


def load_suite(path: Optional[Union[str, Path]] = None) -> SuiteConfig:
    """Reads a suite grid; the bundled acceptance grid when no path is given."""
    path = Path(path) if path else DEFAULT_SUITE
    try:
        return SuiteConfig.model_validate_json(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise PreconditionError(f"cannot read suite config {path}: {e}") from e
    except ValidationError as e:
        raise PreconditionError(f"invalid suite config {path}: {e}") from e


def expand_grid(entry: CheckEntry) -> List[Dict[str, Union[int, str]]]:
    """The cartesian product of the entry's parameter lists, in key order."""
    keys = sorted(entry.params)
    axes = [value if isinstance(value, list) else [value] for value in (entry.params[key] for key in keys)]
    return [dict(zip(keys, combination)) for combination in itertools.product(*axes)]


def _run_one(entry: CheckEntry, params: Dict[str, Union[int, str]], out_dir: Optional[Path], settings: Settings) -> SuiteOutcome:
    expect = entry.expect or DEFAULT_EXPECT.get(entry.check, "holds")
    started = time.perf_counter()
    outcome = SuiteOutcome(check=entry.check, params=params, expect=expect, status="error")
    try:
        reports = run_check(entry.check, params, settings)
    except BudgetExceededError as e:
        logger.warning(f"{entry.check} {params}: budget exceeded ({e.detail})")
        outcome.status, outcome.detail = "budget_exceeded", e.detail
    except ToolkitError as e:
        logger.error(f"{entry.check} {params}: {e.detail}")
        outcome.detail = e.detail
    except Exception as e:
        logger.error(f"{entry.check} {params} crashed: {e}", exc_info=True)
        outcome.detail = str(e)
    else:
        outcome.status = evaluate(reports, expect)
        outcome.verdict = "violated" if any(r.verdict == "violated" for r in reports) else "holds"
        if outcome.status == "failed":
            outcome.detail = f"expected {expect}, got {outcome.verdict}"
        if out_dir is not None:
            payload = reports[0] if len(reports) == 1 else reports
            name = report_file_name(entry.label or entry.check, params)
            write_report(out_dir, name, payload, settings.schema_version)
            outcome.report_file = name
    outcome.runtime_seconds = round(time.perf_counter() - started, 6)
    return outcome


def run_suite(
    config: SuiteConfig,
    out_dir: Optional[Path] = None,
    settings: Optional[Settings] = None,
    write_csv: bool = False,
) -> SuiteReport:
    """
    Runs every (check, parameter combination) of the grid in order. One check
    failing or running out of budget does not stop the rest.
    """
    settings = settings or default_settings
    report = SuiteReport()
    for entry in config.checks:
        for params in expand_grid(entry):
            logger.info(f"Suite: {entry.check} {params}")
            outcome = _run_one(entry, params, out_dir, settings)
            report.outcomes.append(outcome)

    report.passed = sum(o.status == "passed" for o in report.outcomes)
    report.failed = sum(o.status == "failed" for o in report.outcomes)
    report.findings = sum(o.status == "finding" for o in report.outcomes)
    report.budget_exceeded = sum(o.status == "budget_exceeded" for o in report.outcomes)
    report.errors = sum(o.status == "error" for o in report.outcomes)
    logger.info(f"Suite finished: {report.passed} passed, {report.failed} failed, {report.findings} findings, "
                f"{report.budget_exceeded} over budget, {report.errors} errors")

    if out_dir is not None:
        write_report(out_dir, SUMMARY_JSON, report, settings.schema_version)
        if write_csv:
            write_summary_csv(out_dir, (o.model_dump(mode="json") for o in report.outcomes))
    return report


def exit_code(report: SuiteReport) -> int:
    """Failures and errors outrank budget aborts; findings alone still succeed."""
    if report.failed or report.errors:
        return EXIT_VERIFICATION_FAILED
    if report.budget_exceeded:
        return EXIT_BUDGET
    return EXIT_OK
