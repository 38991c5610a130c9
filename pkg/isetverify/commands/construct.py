# isetverify/commands/construct.py
import argparse
from typing import Dict, List, Tuple

from ..config import Settings
from ..errors import EXIT_OK, PreconditionError
from ..graphs import graph6
from ..graphs.canonical import canonical_graph
from ..graphs.constructions import FAMILIES, by_name
from .streams import open_output


def _pair(text: str) -> Tuple[int, int]:
    try:
        u, v = text.split("-")
        return int(u), int(v)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a pair like 0-1, got '{text}'")


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "construct",
        parents=parents,
        help="Print one named graph as graph6",
        description="Builds a named family member. Which of the parameters apply depends on the family.",
    )
    parser.add_argument("family", choices=sorted(FAMILIES))
    parser.add_argument("--n", type=int)
    parser.add_argument("--delta", type=int)
    parser.add_argument("--k", type=int, help="Length for path, cycle and empty")
    parser.add_argument("--a", type=int, help="First part of complete_bipartite")
    parser.add_argument("--b", type=int, help="Second part of complete_bipartite")
    parser.add_argument("--parts", type=int, nargs="+", help="Part sizes for multipartite")
    parser.add_argument("--inside", type=_pair, nargs="*", default=[], help="Inside pairs for extremal_plus, e.g. 0-1 1-2")
    parser.add_argument("--left", help="graph6 of the first operand of disjoint_union")
    parser.add_argument("--right", help="graph6 of the second operand of disjoint_union")
    parser.add_argument("--canonical", action="store_true", help="Print the canonical form instead of the construction labeling")
    parser.set_defaults(run=run)


def family_params(args: argparse.Namespace) -> Dict[str, object]:
    params: Dict[str, object] = {
        key: getattr(args, key) for key in ("n", "delta", "k", "a", "b") if getattr(args, key) is not None
    }
    if args.parts:
        params["parts"] = list(args.parts)
    if args.inside:
        params["inside"] = list(args.inside)
    if args.family == "disjoint_union":
        if not args.left or not args.right:
            raise PreconditionError("disjoint_union needs --left and --right")
        params["left"] = graph6.decode(args.left)
        params["right"] = graph6.decode(args.right)
    return params


def run(args: argparse.Namespace, settings: Settings) -> int:
    g = by_name(args.family, family_params(args))
    if args.canonical:
        g = canonical_graph(g)
    with open_output(args.output) as sink:
        sink.write(graph6.encode(g) + "\n")
    return EXIT_OK
