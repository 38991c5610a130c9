# isetverify/commands/suite.py
import argparse
from pathlib import Path

from ..config import Settings
from ..report_store import write_json
from ..services import suite_service
from .streams import open_output


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "suite",
        parents=parents,
        help="Run a grid of checks and write one report per check",
        description="Without --config, runs the bundled acceptance grid.",
    )
    parser.add_argument("--config", dest="grid", help="Suite grid JSON (a list of checks with parameter lists)")
    parser.add_argument("--out", help="Report directory; defaults to the report_dir setting")
    parser.add_argument("--csv", action="store_true", help="Also write summary.csv")
    parser.set_defaults(run=run)


def run(args: argparse.Namespace, settings: Settings) -> int:
    config = suite_service.load_suite(args.grid)
    out_dir = Path(args.out or settings.report_dir)
    report = suite_service.run_suite(config, out_dir, settings, write_csv=args.csv)
    with open_output(args.output) as sink:
        write_json(sink, report, settings.schema_version)
    return suite_service.exit_code(report)
