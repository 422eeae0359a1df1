"""Counterfactual subcommands."""
import argparse
import logging
from pathlib import Path

from rank_bias.config import Settings
from rank_bias.counterfactual.cds import cds_collection
from rank_bias.counterfactual.crud import (
    load_pos_annotations,
    write_crbo,
    write_crbo_summary,
    write_transform_report,
)
from rank_bias.counterfactual.rbo import crbo
from rank_bias.lexicon.crud import load_cds_mapping, load_lexicon
from rank_bias.options import (
    add_common_options,
    add_lexicon_option,
    add_queries_option,
    add_rbo_options,
)
from rank_bias.rankings.crud import parse_query_set, parse_runs, restrict

LOG = logging.getLogger(__name__)


def cmd_cds(args: argparse.Namespace, settings: Settings) -> int:
    """Write the counterfactual collection and its substitution report."""
    mapping = load_cds_mapping(settings.CDS_PATH)
    uncovered = mapping.uncovered_terms(load_lexicon(settings.LEXICON_PATH))
    if uncovered:
        LOG.warning("CDS terms not in the lexicon: %s", ", ".join(uncovered))
    annotations = load_pos_annotations(args.pos) if args.pos else None
    report = cds_collection(
        args.collection,
        mapping,
        args.out,
        pos_annotations=annotations,
        workers=settings.WORKERS,
        chunk_size=settings.CHUNK_SIZE,
    )
    report_path = args.report or args.out.with_name(f"{args.out.name}.report.json")
    write_transform_report(report, report_path)
    print(
        f"Rewrote {report.documents} documents ({report.changed} changed, "
        f"{sum(report.substitutions.values())} substitutions) -> {args.out}"
    )
    return 0


def cmd_crbo(args: argparse.Namespace, settings: Settings) -> int:
    """Compare original and counterfactual rankings with RBO."""
    original, counterfactual = parse_runs(
        [args.original, args.counterfactual], workers=min(settings.WORKERS, 2)
    )
    if args.queries:
        query_ids = parse_query_set(args.queries)
        original = restrict(original, query_ids)
        counterfactual = restrict(counterfactual, query_ids)
    report = crbo(original, counterfactual, settings.rbo_config())
    report.config = settings.snapshot()
    write_crbo(report, args.out_dir / "crbo.csv")
    write_crbo_summary(report, args.out_dir / "crbo.json")
    print(f"CRBO mean over {len(report.per_query)} queries: {report.mean:.4f}")
    return 0


def add_cds_parser(subparsers: argparse._SubParsersAction) -> None:
    """Register the `cds` subcommand."""
    parser = subparsers.add_parser(
        "cds",
        help="Write the counterfactual version of a collection.",
        description="Swap group terms and names with their counterparts.",
    )
    parser.add_argument("collection", type=Path, help="Collection TSV (.gz accepted).")
    parser.add_argument(
        "-o", "--out", type=Path, required=True, help="Counterfactual collection."
    )
    parser.add_argument(
        "--mapping",
        dest="CDS_PATH",
        type=Path,
        default=None,
        help="CDS TSV mapping (default: bundled gender mapping).",
    )
    parser.add_argument(
        "--pos",
        type=Path,
        default=None,
        help="POS annotations doc_id<TAB>token_index<TAB>POSS|PRON "
        "(default: heuristic).",
    )
    parser.add_argument(
        "--report",
        type=Path,
        default=None,
        help="Substitution counts JSON (default: <out>.report.json).",
    )
    add_lexicon_option(parser)
    add_common_options(parser)
    parser.set_defaults(handler=cmd_cds)


def add_crbo_parser(subparsers: argparse._SubParsersAction) -> None:
    """Register the `crbo` subcommand."""
    parser = subparsers.add_parser(
        "crbo",
        help="Rank-biased overlap of original and counterfactual runs.",
        description="Compare per query the rankings retrieved on the original "
        "and on the counterfactual collection.",
    )
    parser.add_argument("original", type=Path, help="Run on the original collection.")
    parser.add_argument(
        "counterfactual", type=Path, help="Run on the counterfactual collection."
    )
    parser.add_argument(
        "-o",
        "--out-dir",
        type=Path,
        default=Path("."),
        help="Directory of crbo.csv and crbo.json (default: current directory).",
    )
    add_rbo_options(parser)
    add_queries_option(parser)
    add_common_options(parser)
    parser.set_defaults(handler=cmd_crbo)
