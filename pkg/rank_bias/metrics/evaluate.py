"""Per query evaluation of all the fairness measures."""
import logging
from collections.abc import Mapping
from concurrent.futures import ThreadPoolExecutor
from functools import partial
from typing import Dict, Optional, Union

from rank_bias.corpus.index import CorpusIndex
from rank_bias.exceptions import DegenerateBackgroundError, InvalidInputError
from rank_bias.metrics.enum import Distance
from rank_bias.metrics.fairness import (
    associations_from,
    awrf_from,
    ifairr,
    max_ted,
    neutrality_from,
    nfairr_from,
    ranked_arrays,
    rbdf_from,
    representation_from,
    ted_from,
    term_exposures_from,
)
from rank_bias.metrics.schemas import FairnessConfig, QueryFairness
from rank_bias.pool import ordered_map
from rank_bias.rankings.schemas import RankedList

LOG = logging.getLogger(__name__)

Background = Union[float, Mapping[str, float]]


def evaluate_query(
    ranked_list: RankedList,
    index: CorpusIndex,
    background_ifairr: float,
    cfg: FairnessConfig,
    distance: Distance = Distance.TOTAL_VARIATION,
) -> QueryFairness:
    """Compute every fairness measure of a ranked list.

    An empty list is excluded: every measure is undefined and a warning is
    logged.

    Args:
    ----
        ranked_list (RankedList): Ranking.
        index (CorpusIndex): Document statistics.
        background_ifairr (float): Ideal FaiRR of the background set.
        cfg (FairnessConfig): Cut-off, threshold, target and log base.
        distance (Distance): Distance used by AWRF.

    Returns:
    -------
        QueryFairness.
    """
    query_id = ranked_list.query_id
    lengths, mags = ranked_arrays(ranked_list, index, cfg)
    if len(lengths) == 0:
        LOG.warning("Query %s: empty ranked list, excluded", query_id)
        return QueryFairness.excluded_query(query_id)

    target = cfg.target_vector()
    bias = cfg.position_bias(len(lengths))
    fairr_value = float(neutrality_from(mags, target, cfg.tau) @ bias)
    rep = representation_from(term_exposures_from(lengths, mags, bias))
    rbdf_value = rbdf_from(mags, bias)
    ted_value = ted_from(rep, target, rbdf_value, apply_rbdf=True)
    ted_no_rbdf = ted_from(rep, target, rbdf_value, apply_rbdf=False)
    top = max_ted(target)
    return QueryFairness(
        query_id=query_id,
        fairr=fairr_value,
        nfairr=nfairr_from(fairr_value, background_ifairr, query_id),
        texfair=top - ted_value,
        texfair_no_rbdf=top - ted_no_rbdf,
        ted=ted_value,
        rbdf=rbdf_value,
        awrf_doc=awrf_from(associations_from(mags), bias, target, distance),
        group_representation=(
            None if rep is None else dict(zip(cfg.group_ids, rep.tolist()))
        ),
        undefined_representation=rep is None,
    )


def background_for(background: Background, query_id: str) -> float:
    """Ideal FaiRR of a query background."""
    if isinstance(background, Mapping):
        value = background.get(query_id)
        if value is None:
            raise DegenerateBackgroundError(f"No background set for query {query_id}")
        return value
    return background


def _evaluate_one(
    ranked_list: RankedList,
    *,
    index: CorpusIndex,
    background: Background,
    cfg: FairnessConfig,
    distance: Distance,
) -> QueryFairness:
    try:
        return evaluate_query(
            ranked_list,
            index,
            background_for(background, ranked_list.query_id),
            cfg,
            distance,
        )
    except InvalidInputError as e:
        LOG.warning("Query %s excluded: %s", ranked_list.query_id, e.detail)
        return QueryFairness.excluded_query(ranked_list.query_id)


def evaluate_run(
    run: Mapping[str, RankedList],
    index: CorpusIndex,
    cfg: FairnessConfig,
    *,
    background: Background,
    distance: Distance = Distance.TOTAL_VARIATION,
    workers: int = 1,
) -> list[QueryFairness]:
    """Evaluate every query of a run.

    Queries are evaluated by a thread pool; results are in query id order.
    Failing queries are logged and excluded.

    Args:
    ----
        run (Mapping): Query id to ranked list. Every ranked document must be
            indexed, see `valid_run_documents`.
        index (CorpusIndex): Document statistics.
        cfg (FairnessConfig): Cut-off, threshold, target and log base.
        background (float | Mapping): Ideal FaiRR shared by every query, or
            query id to ideal FaiRR of its own background.
        distance (Distance): Distance used by AWRF.
        workers (int): Threads.

    Returns:
    -------
        list of QueryFairness.
    """
    task = partial(
        _evaluate_one, index=index, background=background, cfg=cfg, distance=distance
    )
    lists = [run[query_id] for query_id in sorted(run)]
    return list(
        ordered_map(task, lists, workers=workers, executor_cls=ThreadPoolExecutor)
    )


def per_query_ifairr(
    background_run: Mapping[str, RankedList],
    index: CorpusIndex,
    cfg: FairnessConfig,
    query_ids: Optional[list[str]] = None,
) -> Dict[str, float]:
    """Ideal FaiRR of each query using the documents it retrieved as background.

    Queries with an empty background are left out, so that they are excluded
    at evaluation time.
    """
    values: Dict[str, float] = {}
    for query_id in query_ids if query_ids is not None else sorted(background_run):
        ranked_list = background_run.get(query_id)
        if ranked_list is None or not ranked_list.doc_ids:
            LOG.warning("Query %s: no background documents", query_id)
            continue
        values[query_id] = ifairr(index, cfg, ranked_list.doc_ids)
    return values
