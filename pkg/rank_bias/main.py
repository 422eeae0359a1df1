"""Entry point of the rank-bias command line."""
import argparse
import logging
import sys
from collections.abc import Sequence
from typing import Optional

from pydantic import ValidationError

from rank_bias.config import load_settings
from rank_bias.exceptions import RankBiasError
from rank_bias.options import settings_overrides
from rank_bias.router import build_parser

LOG = logging.getLogger(__name__)

LOG_FORMAT = "%(asctime)s %(levelname)s %(name)s: %(message)s"
VERBOSITY = {1: "INFO", 2: "DEBUG"}


def configure_logging(verbose: int, default_level: str) -> None:
    """Log to stderr; each -v lowers the threshold, the default comes from
    the LOG_LEVEL setting.
    """
    level = VERBOSITY.get(min(verbose, 2), default_level)
    logging.basicConfig(format=LOG_FORMAT, stream=sys.stderr)
    logging.getLogger().setLevel(level)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse the arguments, run the subcommand and return its exit code.

    Exit codes: 0 success, 1 I/O error, 2 invalid input.
    """
    args: argparse.Namespace = build_parser().parse_args(argv)
    try:
        settings = load_settings(args.config, settings_overrides(args))
        configure_logging(args.verbose, settings.LOG_LEVEL)
        LOG.debug("Effective settings: %s", settings.snapshot())
        return args.handler(args, settings)
    except RankBiasError as e:
        LOG.error("%s", e.detail)
        return e.exit_code
    except ValidationError as e:
        LOG.error("Invalid input: %s", e)
        return 2
    except OSError as e:
        LOG.error("I/O error: %s", e)
        return 1


if __name__ == "__main__":
    sys.exit(main())
