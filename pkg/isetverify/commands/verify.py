# isetverify/commands/verify.py
import argparse
import logging
from typing import List

from ..config import Settings
from ..errors import EXIT_OK, EXIT_VERIFICATION_FAILED
from ..models.report import AnyReport
from ..models.suite import CheckEntry
from ..report_store import write_json
from ..services.suite_service import expand_grid
from ..services.verifier_service import CHECKS, DEFAULT_EXPECT, evaluate, run_check
from .streams import open_output

logger = logging.getLogger(__name__)


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "verify",
        parents=parents,
        help="Run one registered check over a parameter grid",
        description="Each of --n, --delta and --t takes one or more values; every combination is checked.",
    )
    parser.add_argument("--check", required=True, choices=sorted(CHECKS))
    parser.add_argument("--n", type=int, nargs="+", required=True)
    parser.add_argument("--delta", type=int, nargs="+")
    parser.add_argument("--t", type=int, nargs="+")
    parser.add_argument("--expect", choices=["holds", "violated", "any", "conjecture"],
                        help="Expected verdict; defaults to the check's own")
    parser.set_defaults(run=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    params = {key: getattr(args, key) for key in ("n", "delta", "t") if getattr(args, key) is not None}
    entry = CheckEntry(check=args.check, params=params, expect=args.expect)
    expect = entry.expect or DEFAULT_EXPECT.get(entry.check, "holds")

    reports: List[AnyReport] = []
    failed = False
    for combination in expand_grid(entry):
        produced = run_check(entry.check, combination, settings)
        if evaluate(produced, expect) == "failed":
            logger.warning(f"{entry.check} {combination}: expected {expect}")
            failed = True
        reports.extend(produced)

    with open_output(args.output) as sink:
        write_json(sink, reports[0] if len(reports) == 1 else reports, settings.schema_version)
    return EXIT_VERIFICATION_FAILED if failed else EXIT_OK
