"""Rank-biased overlap and its counterfactual estimate over runs."""
import logging
from collections.abc import Mapping, Sequence

import numpy as np

from rank_bias.counterfactual.enum import RboVariant
from rank_bias.counterfactual.schemas import CrboReport, RboConfig
from rank_bias.exceptions import InvalidInputError
from rank_bias.rankings.schemas import RankedList

LOG = logging.getLogger(__name__)


def _check_unique(items: Sequence[str], name: str) -> None:
    seen = set()
    for item in items:
        if item in seen:
            raise InvalidInputError(f"Item '{item}' repeated in {name}")
        seen.add(item)


def rbo(list_a: Sequence[str], list_b: Sequence[str], cfg: RboConfig) -> float:
    """Rank-biased overlap of two rankings.

    The series is evaluated up to D = min(depth, |A|, |B|). The extrapolated
    variant adds the agreement at depth D for all the following ranks. Items
    past the shorter list are never seen, so a list that is a prefix of the
    other scores 1 with the extrapolated variant, e.g. [a] against [a, b, c].

    Args:
    ----
        list_a (Sequence): First ranking, without repetitions.
        list_b (Sequence): Second ranking, without repetitions.
        cfg (RboConfig): Persistence, depth and variant.

    Returns:
    -------
        float. 1 for identical and 0 for disjoint rankings. Two empty rankings
        are identical; an empty and a non empty ranking are disjoint.

    Raises:
    ------
        InvalidInputError: Repeated item in a list.
    """
    _check_unique(list_a, "first list")
    _check_unique(list_b, "second list")
    if not list_a and not list_b:
        return 1.0
    if not list_a or not list_b:
        return 0.0

    p = cfg.p
    depth = min(cfg.depth, len(list_a), len(list_b))
    seen_a: set[str] = set()
    seen_b: set[str] = set()
    overlap = 0
    total = 0.0
    for d in range(1, depth + 1):
        x, y = list_a[d - 1], list_b[d - 1]
        seen_b.add(y)
        overlap += (x in seen_b) + (y in seen_a)
        seen_a.add(x)
        total += p ** (d - 1) * overlap / d
    score = (1 - p) * total
    if cfg.variant == RboVariant.EXTRAPOLATED:
        score += overlap / depth * p**depth
    # Rounding may exceed 1 on identical lists.
    return min(score, 1.0)


def crbo(
    original_runs: Mapping[str, RankedList],
    counterfactual_runs: Mapping[str, RankedList],
    cfg: RboConfig,
) -> CrboReport:
    """RBO of each query between the original and the counterfactual ranking.

    Only queries in both runs are compared; a warning is logged when the two
    query sets differ.

    Raises:
    ------
        InvalidInputError: The runs have no query in common.
    """
    common = sorted(set(original_runs) & set(counterfactual_runs))
    missing = sorted(set(original_runs) ^ set(counterfactual_runs))
    if not common:
        raise InvalidInputError("Original and counterfactual runs share no query")
    if missing:
        LOG.warning(
            "%d queries are only in one of the runs, comparing %d common queries",
            len(missing),
            len(common),
        )
    per_query = {
        query_id: rbo(
            original_runs[query_id].doc_ids, counterfactual_runs[query_id].doc_ids, cfg
        )
        for query_id in common
    }
    mean = float(np.mean(list(per_query.values())))
    return CrboReport(per_query=per_query, mean=mean, missing_queries=missing)
