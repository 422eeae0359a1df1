"""Fairness measures at several ranking cut-offs."""
import logging
from collections.abc import Mapping, Sequence
from typing import Optional

import pandas as pd

from rank_bias.analysis.constants import FAIRNESS_METRICS, SWEEP_COLUMNS
from rank_bias.analysis.stats import mean_defined
from rank_bias.corpus.index import CorpusIndex
from rank_bias.exceptions import InvalidInputError
from rank_bias.metrics.enum import Distance
from rank_bias.metrics.evaluate import Background, evaluate_run, per_query_ifairr
from rank_bias.metrics.fairness import background_neutrality, ideal_fairr_from
from rank_bias.metrics.schemas import FairnessConfig
from rank_bias.rankings.schemas import RankedList

LOG = logging.getLogger(__name__)


def valid_cutoffs(ks: Sequence[int]) -> list[int]:
    """Sorted distinct cut-offs, each at least 1."""
    if not ks:
        raise InvalidInputError("At least one cut-off is required")
    bad = [k for k in ks if k < 1]
    if bad:
        raise InvalidInputError(f"Cut-offs must be >= 1, got {bad}")
    return sorted(set(ks))


def cutoff_sweep(
    run: Mapping[str, RankedList],
    index: CorpusIndex,
    cfg: FairnessConfig,
    ks: Sequence[int],
    *,
    background_run: Optional[Mapping[str, RankedList]] = None,
    distance: Distance = Distance.TOTAL_VARIATION,
    workers: int = 1,
) -> pd.DataFrame:
    """Mean fairness measures of a run at every cut-off.

    The ideal FaiRR of the background is recomputed at each cut-off. With no
    background run the whole index is the background and its neutrality scores
    are computed once.

    Args:
    ----
        run (Mapping): Query id to ranked list.
        index (CorpusIndex): Document statistics.
        cfg (FairnessConfig): Fairness parameters, k is replaced by each cut-off.
        ks (Sequence of int): Cut-offs.
        background_run (Mapping | None): Run whose lists are the per query
            background sets.
        distance (Distance): Distance used by AWRF.
        workers (int): Evaluation threads.

    Returns:
    -------
        pd.DataFrame. One row per cut-off with the measure means and the number
        of included queries.
    """
    ks = valid_cutoffs(ks)
    scores = background_neutrality(index, cfg) if background_run is None else None
    rows = []
    for k in ks:
        cfg_k = cfg.with_k(k)
        background: Background
        if scores is not None:
            background = ideal_fairr_from(scores, cfg_k)
        else:
            background = per_query_ifairr(background_run, index, cfg_k, sorted(run))
        results = evaluate_run(
            run, index, cfg_k, background=background, distance=distance, workers=workers
        )
        kept = [r for r in results if not r.excluded]
        row = {"k": k}
        for metric in FAIRNESS_METRICS:
            row[metric], _ = mean_defined(getattr(q, metric) for q in kept)
        row["included"] = len(kept)
        LOG.info("k=%d: %d queries included", k, len(kept))
        rows.append(row)
    return pd.DataFrame(rows, columns=list(SWEEP_COLUMNS))
