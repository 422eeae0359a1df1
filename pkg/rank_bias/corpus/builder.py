"""Streaming construction of the corpus index."""
import logging
from collections.abc import Iterable
from functools import partial
from typing import Dict, Optional

import numpy as np
from tqdm import tqdm

from rank_bias.corpus.index import CorpusIndex
from rank_bias.corpus.tokenizer import TOKENIZER_ID, tokenize
from rank_bias.exceptions import CollectionError
from rank_bias.lexicon.schemas import GroupLexicon
from rank_bias.pool import chunked, ordered_map

LOG = logging.getLogger(__name__)

Document = tuple[int, str, str]


def count_document(
    text: str, term_groups: Dict[str, int], n_groups: int
) -> tuple[int, np.ndarray]:
    """Return token count and per-group term frequency of a text."""
    tokens = tokenize(text)
    mags = np.zeros(n_groups, dtype=np.int64)
    for token in tokens:
        group = term_groups.get(token)
        if group is not None:
            mags[group] += 1
    return len(tokens), mags


def count_chunk(
    chunk: list[Document], term_groups: Dict[str, int], n_groups: int
) -> tuple[list[tuple[int, str]], np.ndarray, np.ndarray]:
    """Worker task: statistics of a list of documents."""
    lengths = np.zeros(len(chunk), dtype=np.int64)
    mags = np.zeros((len(chunk), n_groups), dtype=np.int64)
    for i, (_, _, text) in enumerate(chunk):
        lengths[i], mags[i] = count_document(text, term_groups, n_groups)
    return [(lineno, doc_id) for lineno, doc_id, _ in chunk], lengths, mags


def build_index(
    collection: Iterable[Document],
    lexicon: GroupLexicon,
    *,
    workers: int = 1,
    chunk_size: int = 10000,
    progress: Optional[bool] = None,
) -> CorpusIndex:
    """Tokenize every document and count the lexicon terms.

    Documents are processed in chunks by a pool of worker processes; results
    are merged in collection order and the index is then sorted by doc_id.

    Args:
    ----
        collection (Iterable): (line number, doc_id, text) tuples, as yielded by
            `read_collection`.
        lexicon (GroupLexicon): Group terms to count.
        workers (int): Worker processes.
        chunk_size (int): Documents per worker task.
        progress (bool | None): Show a progress bar. By default it is shown
            when INFO messages are enabled.

    Returns:
    -------
        CorpusIndex.

    Raises:
    ------
        CollectionError: Duplicated doc_id. The message names the id and the
            lines where it appears.
    """
    if progress is None:
        progress = LOG.isEnabledFor(logging.INFO)
    task = partial(
        count_chunk, term_groups=lexicon.term_groups(), n_groups=len(lexicon.groups)
    )
    seen: Dict[str, int] = {}
    doc_ids: list[str] = []
    lengths: list[np.ndarray] = []
    mags: list[np.ndarray] = []
    with tqdm(desc="Indexing", unit="doc", disable=not progress) as bar:
        results = ordered_map(task, chunked(collection, chunk_size), workers=workers)
        for ids, chunk_lengths, chunk_mags in results:
            for lineno, doc_id in ids:
                first = seen.setdefault(doc_id, lineno)
                if first != lineno:
                    raise CollectionError(
                        f"Duplicate doc_id '{doc_id}' at lines {first} and {lineno}"
                    )
                doc_ids.append(doc_id)
            lengths.append(chunk_lengths)
            mags.append(chunk_mags)
            bar.update(len(ids))

    n_groups = len(lexicon.groups)
    index = CorpusIndex(
        doc_ids=doc_ids,
        lengths=np.concatenate(lengths) if lengths else np.zeros(0, dtype=np.int64),
        magnitudes=(
            np.concatenate(mags) if mags else np.zeros((0, n_groups), dtype=np.int64)
        ),
        group_ids=lexicon.group_ids,
        lexicon_fingerprint=lexicon.fingerprint(),
        tokenizer_id=TOKENIZER_ID,
    )
    LOG.info("Indexed %d documents", len(index))
    return index


def build_index_from_texts(
    documents: Dict[str, str], lexicon: GroupLexicon
) -> CorpusIndex:
    """Build an index from an in-memory doc_id to text mapping."""
    collection = [
        (lineno, doc_id, text)
        for lineno, (doc_id, text) in enumerate(documents.items(), start=1)
    ]
    return build_index(collection, lexicon, progress=False)
