"""Module with the subcommand architecture."""
import argparse

from rank_bias.analysis.commands import add_evaluate_parser, add_sweep_parser
from rank_bias.corpus.commands import add_index_parser
from rank_bias.counterfactual.commands import add_cds_parser, add_crbo_parser


def build_parser() -> argparse.ArgumentParser:
    """Command line parser with every subcommand registered."""
    parser = argparse.ArgumentParser(
        prog="rank-bias",
        description="Measure group representation bias of document rankings.",
    )
    subparsers = parser.add_subparsers(
        title="subcommands", dest="command", metavar="COMMAND", required=True
    )
    add_index_parser(subparsers)
    add_evaluate_parser(subparsers)
    add_cds_parser(subparsers)
    add_crbo_parser(subparsers)
    add_sweep_parser(subparsers)
    return parser
