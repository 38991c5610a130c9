# isetverify/commands/count.py
import argparse
import json
import logging

from ..config import Settings
from ..errors import EXIT_OK, PreconditionError
from ..graphs import graph6
from ..graphs.counting import independence_vector
from .streams import open_input, open_output

logger = logging.getLogger(__name__)


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "count",
        parents=parents,
        help="Count independent sets of graph6 graphs, one per line",
        description="Reads graph6 lines and prints i_t, or the whole count vector with its total.",
    )
    which = parser.add_mutually_exclusive_group()
    which.add_argument("--t", type=int, help="Print i_t only")
    which.add_argument("--all", action="store_true", help="Print i_0,...,i_alpha and the total (default)")
    parser.add_argument("--format", choices=["text", "json"], default="text")
    parser.set_defaults(run=run)


def _line(g6: str, vector, t, fmt: str) -> str:
    if fmt == "json":
        record = {"graph6": g6, "counts": list(vector), "total": vector.total}
        if t is not None:
            record["t"], record["count"] = t, vector[t]
        return json.dumps(record)
    if t is not None:
        return str(vector[t])
    return f"{','.join(str(c) for c in vector)} total={vector.total}"


def run(args: argparse.Namespace, settings: Settings) -> int:
    if args.t is not None and args.t < 0:
        raise PreconditionError(f"--t must be nonnegative, got {args.t}")
    with open_input(args.input) as source, open_output(args.output) as sink:
        lines = 0
        for _, g in graph6.decode_lines(source):
            vector = independence_vector(g)
            sink.write(_line(graph6.encode(g), vector, args.t, args.format) + "\n")
            lines += 1
    logger.debug(f"Counted {lines} graphs")
    return EXIT_OK
