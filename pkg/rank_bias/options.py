"""Module defining the command line options shared by subcommands.

Options overriding a setting use the setting name as `dest` and None as default,
so that only flags explicitly given take precedence over the config file and the
environment.
"""
import argparse
from pathlib import Path
from typing import Any, Dict

from rank_bias.config import Settings
from rank_bias.counterfactual.enum import RboVariant


def default_of(name: str) -> Any:
    """Default value of a setting, shown in the help messages."""
    value = Settings.__fields__[name].default
    return getattr(value, "value", value)


def add_common_options(parser: argparse.ArgumentParser) -> None:
    """Options available to every subcommand."""
    parser.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="Increase verbosity (-v INFO, -vv DEBUG).",
    )
    parser.add_argument(
        "--config",
        type=Path,
        default=None,
        help="TOML or JSON file with settings. Flags take precedence over it.",
    )
    parser.add_argument(
        "--workers",
        dest="WORKERS",
        type=int,
        default=None,
        help="Worker pool size (default: number of CPUs, env RANK_BIAS_WORKERS).",
    )


def add_lexicon_option(parser: argparse.ArgumentParser) -> None:
    """Group lexicon file."""
    parser.add_argument(
        "--lexicon",
        dest="LEXICON_PATH",
        type=Path,
        default=None,
        help="Lexicon JSON file (default: bundled gender lexicon).",
    )


def add_fairness_options(parser: argparse.ArgumentParser) -> None:
    """Fairness metric parameters."""
    parser.add_argument(
        "-k",
        "--k",
        dest="K",
        type=int,
        default=None,
        help=f"Ranking cut-off (default: {default_of('K')}).",
    )
    parser.add_argument(
        "--tau",
        dest="TAU",
        type=int,
        default=None,
        help=f"Neutrality threshold (default: {default_of('TAU')}).",
    )
    parser.add_argument(
        "--log-base",
        dest="LOG_BASE",
        type=float,
        default=None,
        help=f"Position bias 1/log(r+1) base (default: {default_of('LOG_BASE')}).",
    )


def add_rbo_options(parser: argparse.ArgumentParser) -> None:
    """Rank-biased overlap parameters."""
    parser.add_argument(
        "--rbo-p",
        dest="RBO_P",
        type=float,
        default=None,
        help=f"RBO persistence p in (0,1) (default: {default_of('RBO_P')}).",
    )
    parser.add_argument(
        "--rbo-depth",
        dest="RBO_DEPTH",
        type=int,
        default=None,
        help=f"RBO evaluation depth (default: {default_of('RBO_DEPTH')}).",
    )
    parser.add_argument(
        "--rbo-variant",
        dest="RBO_VARIANT",
        choices=[v.value for v in RboVariant],
        default=None,
        help=f"RBO variant (default: {default_of('RBO_VARIANT')}).",
    )


def add_queries_option(parser: argparse.ArgumentParser) -> None:
    """Restrict the evaluation to a query set."""
    parser.add_argument(
        "--queries",
        type=Path,
        default=None,
        help="File listing the query ids to evaluate (default: every query).",
    )


def settings_overrides(args: argparse.Namespace) -> Dict[str, Any]:
    """Extract explicitly given setting values from the parsed arguments."""
    return {
        name: value
        for name, value in vars(args).items()
        if name in Settings.__fields__ and value is not None
    }
