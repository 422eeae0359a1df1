"""Retrieval effectiveness measures."""
import logging
from typing import Optional

import numpy as np

from rank_bias.rankings.crud import truncate
from rank_bias.rankings.schemas import Qrels, RankedList

LOG = logging.getLogger(__name__)


def _judgements(ranked_list: RankedList, qrels: Qrels) -> Optional[dict[str, int]]:
    judged = qrels.for_query(ranked_list.query_id)
    if judged is None:
        LOG.warning("Query %s has no relevance judgements", ranked_list.query_id)
    return judged


def mrr(ranked_list: RankedList, qrels: Qrels, k: int) -> Optional[float]:
    """Reciprocal rank of the first document with grade >= 1 in the top-k.

    Returns:
    -------
        float | None. 0 when no relevant document is retrieved, None when the
        query is not judged.
    """
    judged = _judgements(ranked_list, qrels)
    if judged is None:
        return None
    for rank, doc_id in enumerate(truncate(ranked_list, k).doc_ids, start=1):
        if judged.get(doc_id, 0) >= 1:
            return 1.0 / rank
    return 0.0


def ndcg(ranked_list: RankedList, qrels: Qrels, k: int) -> Optional[float]:
    """Normalized discounted cumulative gain at k.

    Gains are the relevance grades, the discount is 1/log2(r+1).

    Returns:
    -------
        float | None. 0 when the query has no relevant document, None when it
        is not judged.
    """
    judged = _judgements(ranked_list, qrels)
    if judged is None:
        return None
    doc_ids = truncate(ranked_list, k).doc_ids
    gains = np.array([judged.get(d, 0) for d in doc_ids], dtype=float)
    ideal = np.sort(np.fromiter(judged.values(), dtype=float))[::-1][:k]
    idcg = float(ideal @ discounts(len(ideal)))
    if idcg <= 0:
        return 0.0
    return float(gains @ discounts(len(gains))) / idcg


def discounts(n: int) -> np.ndarray:
    """1/log2(r+1) for ranks 1..n."""
    return 1.0 / np.log2(np.arange(2, n + 2, dtype=float))
