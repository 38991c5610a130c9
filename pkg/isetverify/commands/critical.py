# isetverify/commands/critical.py
import argparse
import logging

from ..config import Settings
from ..errors import EXIT_OK, PreconditionError
from ..graphs import graph6
from ..graphs.criticality import criticality, decompose_critical_2, degree_partition, find_rewire_patterns
from ..graphs.graph import Graph
from ..models.structure import CriticalityOutput
from ..report_store import to_json
from .streams import open_input, open_output

logger = logging.getLogger(__name__)


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "critical",
        parents=parents,
        help="Report edge- and vertex-criticality of graph6 graphs",
        description="One JSON object per input line. Every graph must have minimum degree exactly --delta.",
    )
    parser.add_argument("--delta", type=int, required=True)
    parser.add_argument("--decompose", action="store_true", help="Add the cycle / path split of a connected critical graph (delta = 2)")
    parser.add_argument("--patterns", action="store_true", help="Add every triangle-rewiring pattern (delta = 3)")
    parser.set_defaults(run=run)


def describe(g: Graph, delta: int, decompose: bool = False, patterns: bool = False) -> CriticalityOutput:
    report = criticality(g, delta)
    output = CriticalityOutput(graph6=graph6.encode(g), criticality=report, partition=degree_partition(g, delta))
    if decompose:
        if delta == 2 and report.critical and g.is_connected():
            output.decomposition = decompose_critical_2(g)
        else:
            output.note = "decomposition applies to connected critical graphs of minimum degree 2"
    if patterns:
        if delta == 3:
            output.patterns = find_rewire_patterns(g)
        else:
            output.note = "rewiring patterns apply to minimum degree 3"
    return output


def run(args: argparse.Namespace, settings: Settings) -> int:
    with open_input(args.input) as source, open_output(args.output) as sink:
        for number, g in graph6.decode_lines(source):
            logger.debug(f"Line {number}: {g!r}")
            try:
                output = describe(g, args.delta, args.decompose, args.patterns)
            except PreconditionError as e:
                raise PreconditionError(f"line {number}: {e.detail}") from e
            sink.write(to_json(output, settings.schema_version, indent=None) + "\n")
    return EXIT_OK
