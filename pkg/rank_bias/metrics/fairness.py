"""Fairness measures of ranked lists.

NFaiRR compares the rank discounted neutrality of the retrieved documents with
the best result attainable on a background set. TExFAIR measures the divergence
between the exposure received by each group terms and a target distribution,
discounted by the fraction of retrieved documents with any group term. AWRF
accumulates rank weighted document to group associations.

All measures consider the first min(k, n) documents of a list. Position bias is
1/log(r+1) in the configured base.

Functions ending with `_from` work on the arrays of a single list (lengths,
magnitudes and position bias, in rank order) and are shared by the public
operations, the per query evaluation and the cut-off sweep.
"""
import logging
from collections.abc import Iterable, Mapping, Sequence
from typing import Dict, Optional

import numpy as np
from scipy.spatial.distance import jensenshannon

from rank_bias.corpus.index import CorpusIndex
from rank_bias.corpus.schemas import DocStats
from rank_bias.exceptions import (
    DegenerateBackgroundError,
    InvalidInputError,
    MissingDocumentsError,
)
from rank_bias.metrics.constants import NFAIRR_TOLERANCE
from rank_bias.metrics.dependencies import valid_groups
from rank_bias.metrics.enum import Distance
from rank_bias.metrics.schemas import FairnessConfig
from rank_bias.rankings.crud import truncate
from rank_bias.rankings.schemas import RankedList

LOG = logging.getLogger(__name__)


def ranked_arrays(
    ranked_list: RankedList, index: CorpusIndex, cfg: FairnessConfig
) -> tuple[np.ndarray, np.ndarray]:
    """Lengths and magnitudes of the top-k documents, in rank order.

    Raises:
    ------
        MissingDocumentsError: Ranked documents not in the index.
        FingerprintError: Target and index groups differ.
    """
    valid_groups(cfg, index)
    rows = index.rows(truncate(ranked_list, cfg.k).doc_ids)
    return index.lengths[rows], index.magnitudes[rows]


def group_matrix(docs: Iterable[DocStats], cfg: FairnessConfig) -> np.ndarray:
    """Magnitudes of DocStats objects as a documents x groups matrix."""
    rows = [[doc.magnitudes.get(g, 0) for g in cfg.group_ids] for doc in docs]
    return np.array(rows, dtype=np.int64).reshape(len(rows), len(cfg.group_ids))


# Neutrality and NFaiRR


def neutrality_from(magnitudes: np.ndarray, target: np.ndarray, tau: int) -> np.ndarray:
    """Neutrality score of each document.

    1 when the document has at most tau group terms, otherwise one minus the L1
    distance between its group term shares and the target.
    """
    mags = np.asarray(magnitudes, dtype=float)
    total = mags.sum(axis=1)
    share = np.divide(
        mags, total[:, None], out=np.zeros_like(mags), where=total[:, None] > 0
    )
    scores = 1.0 - np.abs(share - target).sum(axis=1)
    return np.where(total <= tau, 1.0, scores)


def neutrality(doc: DocStats, cfg: FairnessConfig) -> float:
    """Neutrality score of a document.

    Args:
    ----
        doc (DocStats): Document statistics.
        cfg (FairnessConfig): Threshold tau and target.

    Returns:
    -------
        float.
    """
    scores = neutrality_from(group_matrix([doc], cfg), cfg.target_vector(), cfg.tau)
    return float(scores[0])


def fairr(ranked_list: RankedList, index: CorpusIndex, cfg: FairnessConfig) -> float:
    """Rank discounted sum of the neutrality of the top-k documents."""
    _, mags = ranked_arrays(ranked_list, index, cfg)
    scores = neutrality_from(mags, cfg.target_vector(), cfg.tau)
    return float(scores @ cfg.position_bias(len(scores)))


def background_neutrality(
    index: CorpusIndex,
    cfg: FairnessConfig,
    doc_ids: Optional[Iterable[str]] = None,
) -> np.ndarray:
    """Neutrality of the background documents: the whole index by default.

    Raises:
    ------
        DegenerateBackgroundError: Empty background.
        MissingDocumentsError: Background documents not in the index.
    """
    valid_groups(cfg, index)
    if doc_ids is None:
        mags = index.magnitudes
    else:
        mags = index.magnitudes[index.rows(dict.fromkeys(doc_ids))]
    if len(mags) == 0:
        raise DegenerateBackgroundError("Empty background set")
    return neutrality_from(mags, cfg.target_vector(), cfg.tau)


def ideal_fairr_from(scores: np.ndarray, cfg: FairnessConfig) -> float:
    """FaiRR of the k most neutral documents sorted by decreasing neutrality."""
    n = len(scores)
    k = min(cfg.k, n)
    top = np.sort(np.partition(scores, n - k)[n - k :])[::-1]
    return float(top @ cfg.position_bias(k))


def ifairr(
    index: CorpusIndex,
    cfg: FairnessConfig,
    doc_ids: Optional[Iterable[str]] = None,
) -> float:
    """Best FaiRR attainable by reordering the background set.

    Args:
    ----
        index (CorpusIndex): Document statistics.
        cfg (FairnessConfig): Cut-off, threshold, target and log base.
        doc_ids (Iterable | None): Background documents. Default: the whole
            index.

    Returns:
    -------
        float.
    """
    return ideal_fairr_from(background_neutrality(index, cfg, doc_ids), cfg)


def nfairr_from(fairr_value: float, background_ifairr: float, query_id: str) -> float:
    """Normalize FaiRR by the ideal FaiRR of the background.

    Values above 1 mean some ranked documents are outside the background; they
    are returned as computed and a warning is logged.
    """
    if background_ifairr <= 0:
        raise DegenerateBackgroundError("Degenerate background: ideal FaiRR is 0")
    value = fairr_value / background_ifairr
    if value > 1 + NFAIRR_TOLERANCE:
        LOG.warning(
            "Query %s: NFaiRR %.6f > 1, ranked documents outside the background",
            query_id,
            value,
        )
    return value


def nfairr(
    ranked_list: RankedList,
    index: CorpusIndex,
    background_ifairr: float,
    cfg: FairnessConfig,
) -> float:
    """FaiRR of the list normalized by the background ideal FaiRR.

    Raises:
    ------
        DegenerateBackgroundError: background_ifairr is 0.
    """
    return nfairr_from(
        fairr(ranked_list, index, cfg), background_ifairr, ranked_list.query_id
    )


# Term exposure and TExFAIR


def term_exposures_from(
    lengths: np.ndarray, magnitudes: np.ndarray, bias: np.ndarray
) -> np.ndarray:
    """Exposure of every group terms; empty documents contribute 0."""
    mags = np.asarray(magnitudes, dtype=float)
    lengths = np.asarray(lengths, dtype=float)[:, None]
    rel = np.divide(mags, lengths, out=np.zeros_like(mags), where=lengths > 0)
    return bias @ rel


def representation_from(exposures: np.ndarray) -> Optional[np.ndarray]:
    """Share of the total exposure of each group, None when it is 0."""
    total = exposures.sum()
    if total <= 0:
        return None
    return exposures / total


def rbdf_from(magnitudes: np.ndarray, bias: np.ndarray) -> Optional[float]:
    """Position bias share of documents with at least one group term."""
    if len(bias) == 0:
        return None
    representative = np.asarray(magnitudes).sum(axis=1) >= 1
    return float(bias[representative].sum() / bias.sum())


def ted_from(
    representation: Optional[np.ndarray],
    target: np.ndarray,
    rbdf_value: Optional[float],
    apply_rbdf: bool = True,
) -> float:
    """L1 distance from the target, optionally discounted; 0 when undefined."""
    if representation is None:
        return 0.0
    distance = float(np.abs(representation - target).sum())
    return distance * rbdf_value if apply_rbdf else distance


def max_ted(target: np.ndarray) -> float:
    """Largest TED, reached when all exposure goes to the least targeted group."""
    return 2.0 * (1.0 - float(np.min(target)))


def term_exposure_sum(
    ranked_list: RankedList, index: CorpusIndex, group_id: str, cfg: FairnessConfig
) -> float:
    """Rank discounted, length normalized frequency of a group terms.

    Raises:
    ------
        InvalidInputError: Unknown group.
    """
    if group_id not in index.group_ids:
        raise InvalidInputError(f"Unknown group '{group_id}'")
    lengths, mags = ranked_arrays(ranked_list, index, cfg)
    exposures = term_exposures_from(lengths, mags, cfg.position_bias(len(lengths)))
    return float(exposures[index.group_ids.index(group_id)])


def group_representation(
    ranked_list: RankedList, index: CorpusIndex, cfg: FairnessConfig
) -> Optional[Dict[str, float]]:
    """Share of the term exposure of each group.

    Returns:
    -------
        dict | None. None when no group term appears in the top-k.
    """
    lengths, mags = ranked_arrays(ranked_list, index, cfg)
    exposures = term_exposures_from(lengths, mags, cfg.position_bias(len(lengths)))
    rep = representation_from(exposures)
    if rep is None:
        return None
    return dict(zip(cfg.group_ids, rep.tolist()))


def rbdf(
    ranked_list: RankedList, index: CorpusIndex, cfg: FairnessConfig
) -> Optional[float]:
    """Rank-biased discounting factor, None for an empty list."""
    _, mags = ranked_arrays(ranked_list, index, cfg)
    return rbdf_from(mags, cfg.position_bias(len(mags)))


def ted(
    ranked_list: RankedList,
    index: CorpusIndex,
    cfg: FairnessConfig,
    apply_rbdf: bool = True,
) -> float:
    """Term exposure based divergence of the group representation from the target.

    Args:
    ----
        ranked_list (RankedList): Ranking.
        index (CorpusIndex): Document statistics.
        cfg (FairnessConfig): Cut-off, target and log base.
        apply_rbdf (bool): Multiply by the rank-biased discounting factor.

    Returns:
    -------
        float. 0 when the representation is undefined.
    """
    lengths, mags = ranked_arrays(ranked_list, index, cfg)
    bias = cfg.position_bias(len(lengths))
    rep = representation_from(term_exposures_from(lengths, mags, bias))
    return ted_from(rep, cfg.target_vector(), rbdf_from(mags, bias), apply_rbdf)


def texfair(
    ranked_list: RankedList,
    index: CorpusIndex,
    cfg: FairnessConfig,
    apply_rbdf: bool = True,
) -> float:
    """Term exposure based fairness: max TED minus TED.

    With two groups and equal targets it is 1 - TED.
    """
    return max_ted(cfg.target_vector()) - ted(ranked_list, index, cfg, apply_rbdf)


# AWRF


def associations_from(magnitudes: np.ndarray) -> np.ndarray:
    """Group term shares of each document, uniform when it has no group term."""
    mags = np.asarray(magnitudes, dtype=float)
    n_groups = mags.shape[1]
    total = mags.sum(axis=1)[:, None]
    uniform = np.full_like(mags, 1.0 / n_groups)
    return np.divide(mags, total, out=uniform, where=total > 0)


def doc_association(doc: DocStats, cfg: FairnessConfig) -> np.ndarray:
    """Association of a document to every group, in target order."""
    return associations_from(group_matrix([doc], cfg))[0]


def distance_between(p: np.ndarray, q: np.ndarray, distance: Distance) -> float:
    """Distance between two distributions."""
    if distance == Distance.JENSEN_SHANNON:
        return float(jensenshannon(p, q, base=2))
    l1 = float(np.abs(p - q).sum())
    return 0.5 * l1 if distance == Distance.TOTAL_VARIATION else l1


def awrf_from(
    associations: np.ndarray,
    bias: np.ndarray,
    target: np.ndarray,
    distance: Distance = Distance.TOTAL_VARIATION,
) -> Optional[float]:
    """Distance of the normalized accumulated exposure from the target.

    Returns None when the accumulated exposure is 0.
    """
    exposure = bias @ np.asarray(associations, dtype=float)
    norm = exposure.sum()
    if norm <= 0:
        return None
    return distance_between(exposure / norm, target, distance)


def awrf(
    ranked_list: RankedList,
    associations: Mapping[str, Sequence[float]],
    cfg: FairnessConfig,
    distance: Distance = Distance.TOTAL_VARIATION,
) -> Optional[float]:
    """Attention weighted rank fairness with given document associations.

    Args:
    ----
        ranked_list (RankedList): Ranking.
        associations (Mapping): Document id to alignment vector, one value in
            [0,1] per group, in target order.
        cfg (FairnessConfig): Cut-off, target and log base.
        distance (Distance): Distance from the target.

    Returns:
    -------
        float | None. None when the accumulated exposure is 0.

    Raises:
    ------
        MissingDocumentsError: Ranked documents without associations.
        InvalidInputError: Vectors with wrong size or values outside [0,1].
    """
    doc_ids = truncate(ranked_list, cfg.k).doc_ids
    missing = [d for d in doc_ids if d not in associations]
    if missing:
        raise MissingDocumentsError(missing)
    n_groups = len(cfg.target)
    vectors = [list(associations[d]) for d in doc_ids]
    if any(len(v) != n_groups for v in vectors):
        raise InvalidInputError(f"Alignment vectors must have {n_groups} entries")
    matrix = np.array(vectors, dtype=float).reshape(len(doc_ids), n_groups)
    if ((matrix < 0) | (matrix > 1)).any():
        raise InvalidInputError("Alignment values must be in [0,1]")
    return awrf_from(
        matrix, cfg.position_bias(len(doc_ids)), cfg.target_vector(), distance
    )


def awrf_doc(
    ranked_list: RankedList,
    index: CorpusIndex,
    cfg: FairnessConfig,
    distance: Distance = Distance.TOTAL_VARIATION,
) -> Optional[float]:
    """AWRF with associations derived from the document group terms."""
    _, mags = ranked_arrays(ranked_list, index, cfg)
    return awrf_from(
        associations_from(mags),
        cfg.position_bias(len(mags)),
        cfg.target_vector(),
        distance,
    )
