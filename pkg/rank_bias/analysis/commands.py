"""Evaluation and cut-off sweep subcommands."""
import argparse
import logging
import sys
from collections.abc import Sequence
from pathlib import Path
from typing import Optional

import pandas as pd

from rank_bias.analysis.constants import (
    PER_QUERY_FILE,
    RUN_SUFFIXES,
    STATS_FILE,
    SWEEP_CONFIG_FILE,
    SWEEP_FILE,
)
from rank_bias.analysis.crud import (
    write_frame,
    write_per_query,
    write_stats,
    write_sweep_config,
)
from rank_bias.analysis.report import compare, evaluate
from rank_bias.analysis.sweep import cutoff_sweep, valid_cutoffs
from rank_bias.config import Settings
from rank_bias.corpus.crud import load_index
from rank_bias.corpus.index import CorpusIndex
from rank_bias.exceptions import DegenerateBackgroundError, InvalidInputError
from rank_bias.lexicon.crud import load_lexicon
from rank_bias.metrics.dependencies import valid_index, valid_run_documents
from rank_bias.metrics.enum import Distance
from rank_bias.metrics.evaluate import Background, per_query_ifairr
from rank_bias.metrics.fairness import ifairr
from rank_bias.metrics.schemas import FairnessConfig
from rank_bias.options import (
    add_common_options,
    add_fairness_options,
    add_lexicon_option,
    add_queries_option,
)
from rank_bias.rankings.crud import (
    Run,
    parse_qrels,
    parse_query_set,
    parse_run,
    parse_runs,
    restrict,
)

LOG = logging.getLogger(__name__)


def run_tag(path: Path) -> str:
    """Run name: file name without the `.gz` and run file extensions."""
    name = Path(Path(path).name.removesuffix(".gz"))
    return name.stem if name.suffix in RUN_SUFFIXES else name.name


def load_inputs(
    args: argparse.Namespace, settings: Settings
) -> tuple[CorpusIndex, FairnessConfig, Optional[list[str]]]:
    """Load the index checked against the lexicon, the fairness parameters and
    the optional query set.
    """
    lexicon = load_lexicon(settings.LEXICON_PATH)
    index = load_index(args.index)
    valid_index(index, lexicon)
    query_ids = parse_query_set(args.queries) if args.queries else None
    return index, settings.fairness_config(lexicon.target), query_ids


def load_background_run(
    path: Optional[Path], index: CorpusIndex, query_ids: Optional[list[str]]
) -> Optional[Run]:
    """Run whose ranked documents are the per query background sets."""
    if path is None:
        return None
    background_run = restrict(parse_run(path), query_ids)
    valid_run_documents(background_run, index, sys.maxsize)
    return background_run


def parse_cutoffs(value: str) -> list[int]:
    """Comma separated list of cut-offs."""
    try:
        return [int(k) for k in value.split(",") if k.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"Invalid cut-off list '{value}'") from e


def summary_table(aggregates: dict, excluded: dict) -> str:
    """Aggregates of every run as a fixed width table."""
    df = pd.DataFrame.from_dict(aggregates, orient="index", dtype=float)
    df["excluded"] = pd.Series(excluded)
    df.index.name = "run"
    return df.to_string(float_format=lambda v: f"{v:.4f}", na_rep="-")


def cmd_evaluate(args: argparse.Namespace, settings: Settings) -> int:
    """Evaluate one or more runs, the first one being the baseline."""
    tags = [run_tag(p) for p in args.runs]
    if len(set(tags)) != len(tags):
        raise InvalidInputError(f"Runs must have distinct file names: {tags}")
    index, cfg, query_ids = load_inputs(args, settings)
    runs: Sequence[Run] = [
        restrict(run, query_ids)
        for run in parse_runs(args.runs, workers=min(settings.WORKERS, len(tags)))
    ]
    for run in runs:
        valid_run_documents(run, index, cfg.k)
    qrels = parse_qrels(args.qrels) if args.qrels else None

    background_run = load_background_run(args.background_run, index, query_ids)
    background: Background
    if background_run is None:
        background = ifairr(index, cfg)
        LOG.info("Whole collection ideal FaiRR: %.6f", background)
        if background <= 0:
            raise DegenerateBackgroundError("Degenerate background: ideal FaiRR is 0")
    else:
        background = per_query_ifairr(
            background_run, index, cfg, sorted({q for r in runs for q in r})
        )

    config = settings.snapshot()
    reports = [
        evaluate(
            tag,
            run,
            index,
            cfg,
            background=background,
            qrels=qrels,
            distance=Distance(args.distance),
            workers=settings.WORKERS,
            config=config,
        )
        for tag, run in zip(tags, runs)
    ]
    stats = compare(reports)
    write_per_query(reports, cfg.group_ids, args.out_dir / PER_QUERY_FILE)
    write_stats(stats, args.out_dir / STATS_FILE)
    print(summary_table(stats.aggregates, stats.excluded))
    return 0


def cmd_sweep(args: argparse.Namespace, settings: Settings) -> int:
    """Mean fairness measures of a run at several cut-offs."""
    index, cfg, query_ids = load_inputs(args, settings)
    ks = valid_cutoffs(args.ks)
    run = restrict(parse_run(args.run), query_ids)
    valid_run_documents(run, index, max(ks))
    df = cutoff_sweep(
        run,
        index,
        cfg,
        ks,
        background_run=load_background_run(args.background_run, index, query_ids),
        distance=Distance(args.distance),
        workers=settings.WORKERS,
    )
    out = write_frame(df, args.out_dir / SWEEP_FILE)
    write_sweep_config(settings.snapshot(), ks, args.out_dir / SWEEP_CONFIG_FILE)
    print(f"Swept {len(df)} cut-offs -> {out}")
    return 0


def add_evaluation_options(parser: argparse.ArgumentParser) -> None:
    """Options shared by `evaluate` and `sweep`."""
    parser.add_argument(
        "-i", "--index", type=Path, required=True, help="Corpus index file."
    )
    parser.add_argument(
        "--background-run",
        type=Path,
        default=None,
        help="Run whose documents form each query background set "
        "(default: whole collection).",
    )
    parser.add_argument(
        "--distance",
        choices=[d.value for d in Distance],
        default=Distance.TOTAL_VARIATION.value,
        help="AWRF distance (default: total_variation).",
    )
    parser.add_argument(
        "-o",
        "--out-dir",
        type=Path,
        default=Path("."),
        help="Output directory (default: current directory).",
    )
    add_fairness_options(parser)
    add_lexicon_option(parser)
    add_queries_option(parser)
    add_common_options(parser)


def add_evaluate_parser(subparsers: argparse._SubParsersAction) -> None:
    """Register the `evaluate` subcommand."""
    parser = subparsers.add_parser(
        "evaluate",
        help="Fairness and effectiveness of one or more runs.",
        description="Compute NFaiRR, TExFAIR with and without RBDF, AWRF and, "
        "given relevance judgements, MRR and nDCG. With several runs the first "
        "one is the baseline of the paired t-tests.",
    )
    parser.add_argument("runs", type=Path, nargs="+", help="TREC run files.")
    parser.add_argument(
        "--qrels", type=Path, default=None, help="TREC qrels (default: none)."
    )
    add_evaluation_options(parser)
    parser.set_defaults(handler=cmd_evaluate)


def add_sweep_parser(subparsers: argparse._SubParsersAction) -> None:
    """Register the `sweep` subcommand."""
    parser = subparsers.add_parser(
        "sweep",
        help="Fairness measures at several ranking cut-offs.",
        description="Write sweep.csv with the mean measures of a run per cut-off.",
    )
    parser.add_argument("run", type=Path, help="TREC run file.")
    parser.add_argument(
        "--ks",
        type=parse_cutoffs,
        default=[5, 10, 20, 30, 50, 100],
        help="Comma separated cut-offs (default: 5,10,20,30,50,100).",
    )
    add_evaluation_options(parser)
    parser.set_defaults(handler=cmd_sweep)
