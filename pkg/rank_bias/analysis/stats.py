"""Statistics used to compare measures and runs."""
import logging
from collections.abc import Iterable, Sequence
from typing import Optional

import numpy as np
from scipy import stats

from rank_bias.analysis.constants import MIN_CORRELATION_PAIRS, MIN_TTEST_PAIRS
from rank_bias.analysis.schemas import CorrelationResult, TTestResult
from rank_bias.exceptions import StatisticsError

LOG = logging.getLogger(__name__)


def defined_pairs(
    x: Sequence[Optional[float]], y: Sequence[Optional[float]]
) -> tuple[np.ndarray, np.ndarray]:
    """Drop the pairs where any of the two values is undefined."""
    if len(x) != len(y):
        raise StatisticsError(f"Paired samples of different size: {len(x)}, {len(y)}")
    kept = [
        (a, b)
        for a, b in zip(x, y)
        if a is not None and b is not None and np.isfinite(a) and np.isfinite(b)
    ]
    return (
        np.array([a for a, _ in kept], dtype=float),
        np.array([b for _, b in kept], dtype=float),
    )


def pearson(
    x: Sequence[Optional[float]], y: Sequence[Optional[float]]
) -> CorrelationResult:
    """Sample Pearson correlation with a two sided p-value.

    Pairs with an undefined value are dropped.

    Args:
    ----
        x (Sequence): First sample.
        y (Sequence): Second sample, paired with x.

    Returns:
    -------
        CorrelationResult. r is None when a sample has zero variance.

    Raises:
    ------
        StatisticsError: Less than 3 defined pairs.
    """
    xs, ys = defined_pairs(x, y)
    n = len(xs)
    if n < MIN_CORRELATION_PAIRS:
        raise StatisticsError(f"Pearson correlation needs 3 pairs, got {n}")
    if np.all(xs == xs[0]) or np.all(ys == ys[0]):
        LOG.warning("Zero variance sample, correlation undefined")
        return CorrelationResult(n=n)
    result = stats.pearsonr(xs, ys)
    return CorrelationResult(
        n=n, r=float(result.statistic), p_value=float(result.pvalue)
    )


def paired_t_test(
    a: Sequence[Optional[float]], b: Sequence[Optional[float]]
) -> TTestResult:
    """Paired t-test of a against b, two sided.

    Args:
    ----
        a (Sequence): Per query values.
        b (Sequence): Per query values of the same queries.

    Returns:
    -------
        TTestResult. When all the differences are equal the p-value is None
        and t is 0 for identical samples, None otherwise.

    Raises:
    ------
        StatisticsError: Different sizes or less than 2 defined pairs.
    """
    xs, ys = defined_pairs(a, b)
    n = len(xs)
    if n < MIN_TTEST_PAIRS:
        raise StatisticsError(f"Paired t-test needs 2 pairs, got {n}")
    diffs = xs - ys
    mean_difference = float(diffs.mean())
    if np.all(diffs == diffs[0]):
        LOG.warning("Zero variance of the differences, p-value undefined")
        return TTestResult(
            n=n,
            mean_difference=mean_difference,
            t=0.0 if mean_difference == 0 else None,
            zero_variance=True,
        )
    result = stats.ttest_rel(xs, ys)
    return TTestResult(
        n=n,
        mean_difference=mean_difference,
        t=float(result.statistic),
        p_value=float(result.pvalue),
    )


def bonferroni(p_values: Iterable[Optional[float]], m: int) -> list[Optional[float]]:
    """Multiply each p-value by the number of tests, capped at 1.

    Undefined p-values stay undefined.

    Raises:
    ------
        StatisticsError: m is lower than the number of p-values.
    """
    p_values = list(p_values)
    if m < len([p for p in p_values if p is not None]):
        raise StatisticsError(f"m = {m} is lower than the number of tests")
    return [None if p is None else min(1.0, p * m) for p in p_values]


def mean_defined(values: Iterable[Optional[float]]) -> tuple[Optional[float], int]:
    """Arithmetic mean of the defined values and their number."""
    kept = [v for v in values if v is not None and np.isfinite(v)]
    if not kept:
        return None, 0
    return float(np.mean(kept)), len(kept)
