"""Checks run before computing fairness measures."""
from collections.abc import Mapping

from rank_bias.corpus.index import CorpusIndex
from rank_bias.corpus.tokenizer import TOKENIZER_ID
from rank_bias.exceptions import FingerprintError, MissingDocumentsError
from rank_bias.lexicon.schemas import GroupLexicon
from rank_bias.metrics.schemas import FairnessConfig
from rank_bias.rankings.schemas import RankedList


def valid_index(index: CorpusIndex, lexicon: GroupLexicon) -> None:
    """Check the index was built with the given lexicon and tokenizer.

    Args:
    ----
        index (CorpusIndex): Loaded index.
        lexicon (GroupLexicon): Lexicon supplied at query time.

    Raises:
    ------
        FingerprintError: Different lexicon or tokenizer.
    """
    if index.tokenizer_id != TOKENIZER_ID:
        raise FingerprintError(
            f"Index built with tokenizer '{index.tokenizer_id}', "
            f"expected '{TOKENIZER_ID}'"
        )
    index.check_lexicon(lexicon)


def valid_groups(cfg: FairnessConfig, index: CorpusIndex) -> None:
    """Check the target lists the index groups in the same order.

    Raises:
    ------
        FingerprintError: Group ids or order differ.
    """
    if cfg.group_ids != index.group_ids:
        raise FingerprintError(
            f"Target groups {cfg.group_ids} differ from index groups {index.group_ids}"
        )


def valid_run_documents(
    run: Mapping[str, RankedList], index: CorpusIndex, k: int
) -> None:
    """Check every document ranked in the top-k of any query is indexed.

    Raises:
    ------
        MissingDocumentsError: Listing all the missing ids.
    """
    missing = {
        doc_id
        for ranked_list in run.values()
        for doc_id in ranked_list.doc_ids[:k]
        if doc_id not in index
    }
    if missing:
        raise MissingDocumentsError(sorted(missing))
