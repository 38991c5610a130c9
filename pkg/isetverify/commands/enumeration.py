# isetverify/commands/enumeration.py
import argparse
import logging

from ..config import Settings
from ..errors import EXIT_OK
from ..graphs import graph6
from ..graphs.enumeration import Budget, iter_class_forms
from ..models.graph_specs import EnumSpec, ShardSpec
from .streams import open_output

logger = logging.getLogger(__name__)


def register(subparsers, parents) -> None:
    parser = subparsers.add_parser(
        "enumerate",
        parents=parents,
        help="Print one canonical graph6 line per isomorphism class",
        description="Classes on n vertices with minimum degree >= delta (or exactly delta), sorted by canonical form.",
    )
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--delta", type=int, default=0)
    parser.add_argument("--exact", action="store_true", help="Minimum degree exactly delta")
    parser.add_argument("--connected", action="store_true")
    parser.add_argument("--critical", action="store_true", help="Edge- and vertex-critical at delta")
    parser.add_argument("--vertex-critical", action="store_true")
    parser.add_argument("--max-edges", type=int)
    parser.add_argument("--count", action="store_true", help="Print only the number of classes")
    parser.add_argument("--shard-index", type=int, default=0, help="Which shard of the class stream to print")
    parser.add_argument("--shard-count", type=int, default=1, help="Split the class stream into this many disjoint shards")
    parser.set_defaults(run=run)


def spec_from_args(args: argparse.Namespace) -> EnumSpec:
    return EnumSpec(
        n=args.n,
        min_degree=args.delta,
        exact_min_degree=args.exact,
        connected_only=args.connected,
        critical_only=args.critical,
        vertex_critical_only=args.vertex_critical,
        max_edges=args.max_edges,
    )


def run(args: argparse.Namespace, settings: Settings) -> int:
    spec = spec_from_args(args)
    shard = None
    if args.shard_count > 1:
        shard = ShardSpec(index=args.shard_index, count=args.shard_count)
    forms = sorted(form for form, _ in iter_class_forms(spec, shard, Budget.from_settings(settings)))
    logger.info(f"{len(forms)} classes for {spec.model_dump(exclude_defaults=True)}")
    with open_output(args.output) as sink:
        if args.count:
            sink.write(f"{len(forms)}\n")
        else:
            for form in forms:
                sink.write(form.graph6() + "\n")
    return EXIT_OK
