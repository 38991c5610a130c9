# isetverify/main.py
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from .commands import construct, count, critical, enumeration, suite, verify
from .config import Settings, settings as default_settings
from .errors import EXIT_USAGE, PreconditionError, ToolkitError
from .models.cli_config import CliConfig

logger = logging.getLogger(__name__)

COMMANDS = [count, construct, critical, enumeration, verify, suite]


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-i", "--input", help="graph6 input file; stdin when absent or '-'")
    common.add_argument("-o", "--output", help="Output file; stdout when absent or '-'")
    common.add_argument("--settings", dest="settings_file", help="Settings JSON taking precedence over isetverify.json")
    common.add_argument("--jobs", type=int, help="Worker processes for class scans")
    common.add_argument("--max-classes", type=int, help="Abort after this many classes (exit 3)")
    common.add_argument("--timeout-seconds", type=float, help="Wall-clock backstop (exit 3)")
    common.add_argument("--allow-n10", action="store_true", help="Unlock enumeration on 10 vertices")
    common.add_argument("--progress", action="store_true", help="tqdm progress bars on stderr")
    common.add_argument("--log-level", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="isetverify",
        description="Count independent sets, enumerate graphs by minimum degree and verify extremal bounds.",
    )
    subparsers = parser.add_subparsers(dest="subcommand", required=True)
    parents = [_common_flags()]
    for command in COMMANDS:
        command.register(subparsers, parents)
    return parser


def load_settings(cli: CliConfig, base: Settings = default_settings) -> Settings:
    """Values from the settings file take precedence over isetverify.json; flags override both."""
    overrides = cli.settings_overrides()
    if cli.settings_file:
        try:
            values = json.loads(Path(cli.settings_file).read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            raise PreconditionError(f"cannot read settings {cli.settings_file}: {e}") from e
        return Settings(**{**values, **overrides})
    return base.model_copy(update=overrides)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cli = CliConfig(
            subcommand=args.subcommand,
            input=args.input,
            output=args.output,
            settings_file=args.settings_file,
            shard_index=getattr(args, "shard_index", 0),
            shard_count=getattr(args, "shard_count", 1),
            jobs=args.jobs,
            max_classes=args.max_classes,
            timeout_seconds=args.timeout_seconds,
            allow_n10=args.allow_n10,
            progress=args.progress,
            log_level=args.log_level,
        )
        settings = load_settings(cli)
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ToolkitError as e:
        print(f"error: {e.detail}", file=sys.stderr)
        return e.exit_code

    logging.basicConfig(level=settings.log_level.upper(), format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
    logger.debug(f"Running {cli.subcommand} with {settings.model_dump()}")

    try:
        return args.run(args, settings)
    except ToolkitError as e:
        logger.debug(f"{cli.subcommand} stopped: {e.detail}")
        print(f"error: {e.detail}", file=sys.stderr)
        return e.exit_code
    except ValidationError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
