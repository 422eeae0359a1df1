"""Corpus subcommands."""
import argparse
import time
from pathlib import Path

from rank_bias.config import Settings
from rank_bias.corpus.builder import build_index
from rank_bias.corpus.crud import read_collection, save_index
from rank_bias.lexicon.crud import load_lexicon
from rank_bias.options import add_common_options, add_lexicon_option


def cmd_index(args: argparse.Namespace, settings: Settings) -> int:
    """Build the corpus index of a collection and save it.

    Prints the number of indexed documents and the elapsed time.
    """
    start = time.perf_counter()
    lexicon = load_lexicon(settings.LEXICON_PATH)
    index = build_index(
        read_collection(args.collection),
        lexicon,
        workers=settings.WORKERS,
        chunk_size=settings.CHUNK_SIZE,
    )
    save_index(index, args.out)
    elapsed = time.perf_counter() - start
    print(f"Indexed {len(index)} documents in {elapsed:.2f}s -> {args.out}")
    return 0


def add_index_parser(subparsers: argparse._SubParsersAction) -> None:
    """Register the `index` subcommand."""
    parser = subparsers.add_parser(
        "index",
        help="Build the per-document statistics index of a collection.",
        description="Tokenize a Collection TSV file (doc_id<TAB>text) and count "
        "the lexicon terms of every document.",
    )
    parser.add_argument("collection", type=Path, help="Collection TSV (.gz accepted).")
    parser.add_argument("-o", "--out", type=Path, required=True, help="Index file.")
    add_lexicon_option(parser)
    add_common_options(parser)
    parser.add_argument(
        "--chunk-size",
        dest="CHUNK_SIZE",
        type=int,
        default=None,
        help="Documents per worker task (default: 10000).",
    )
    parser.set_defaults(handler=cmd_index)
