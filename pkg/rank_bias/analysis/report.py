"""Evaluation of runs and comparison against a baseline."""
import logging
from collections.abc import Mapping, Sequence
from typing import Any, Dict, Optional

from rank_bias.analysis.constants import (
    COMPARED_METRICS,
    CORRELATED_PAIRS,
    FAIRNESS_METRICS,
)
from rank_bias.analysis.effectiveness import mrr, ndcg
from rank_bias.analysis.schemas import (
    CorrelationResult,
    MetricReport,
    QueryEvaluation,
    StatsReport,
    TTestResult,
)
from rank_bias.analysis.stats import bonferroni, mean_defined, paired_t_test, pearson
from rank_bias.corpus.index import CorpusIndex
from rank_bias.exceptions import StatisticsError
from rank_bias.metrics.enum import Distance
from rank_bias.metrics.evaluate import Background, evaluate_run
from rank_bias.metrics.schemas import FairnessConfig
from rank_bias.rankings.schemas import Qrels, RankedList

LOG = logging.getLogger(__name__)


def aggregate(
    per_query: Sequence[QueryEvaluation], metrics: Sequence[str] = COMPARED_METRICS
) -> tuple[Dict[str, Optional[float]], Dict[str, int]]:
    """Mean of each measure over the included queries where it is defined."""
    kept = [q for q in per_query if not q.excluded]
    means: Dict[str, Optional[float]] = {}
    counts: Dict[str, int] = {}
    for metric in metrics:
        means[metric], counts[metric] = mean_defined(getattr(q, metric) for q in kept)
    return means, counts


def correlate(
    run_tag: str, per_query: Sequence[QueryEvaluation]
) -> list[CorrelationResult]:
    """Query level Pearson correlation of TExFAIR variants with NFaiRR."""
    results = []
    kept = [q for q in per_query if not q.excluded]
    for x, y in CORRELATED_PAIRS:
        xs = [getattr(q, x) for q in kept]
        ys = [getattr(q, y) for q in kept]
        try:
            result = pearson(xs, ys)
        except StatisticsError as e:
            LOG.warning("Run %s, %s vs %s: %s", run_tag, x, y, e.detail)
            result = CorrelationResult(n=0)
        result.run_tag, result.x, result.y = run_tag, x, y
        results.append(result)
    return results


def evaluate(
    run_tag: str,
    run: Mapping[str, RankedList],
    index: CorpusIndex,
    cfg: FairnessConfig,
    *,
    background: Background,
    qrels: Optional[Qrels] = None,
    distance: Distance = Distance.TOTAL_VARIATION,
    workers: int = 1,
    config: Optional[Dict[str, Any]] = None,
) -> MetricReport:
    """Evaluate fairness, and effectiveness when judgements are given, of a run.

    Args:
    ----
        run_tag (str): Run name.
        run (Mapping): Query id to ranked list.
        index (CorpusIndex): Document statistics.
        cfg (FairnessConfig): Fairness parameters.
        background (float | Mapping): Ideal FaiRR, shared or per query.
        qrels (Qrels | None): Relevance judgements.
        distance (Distance): Distance used by AWRF.
        workers (int): Evaluation threads.
        config (dict | None): Settings snapshot stored in the report.

    Returns:
    -------
        MetricReport.
    """
    fairness = evaluate_run(
        run, index, cfg, background=background, distance=distance, workers=workers
    )
    per_query = []
    for result in fairness:
        values = result.dict()
        if qrels is not None and not result.excluded:
            ranked_list = run[result.query_id]
            values["mrr"] = mrr(ranked_list, qrels, cfg.k)
            values["ndcg"] = ndcg(ranked_list, qrels, cfg.k)
        per_query.append(QueryEvaluation(**values))
    metrics = COMPARED_METRICS if qrels is not None else FAIRNESS_METRICS
    aggregates, included = aggregate(per_query, metrics)
    excluded = sum(q.excluded for q in per_query)
    if excluded:
        LOG.warning("Run %s: %d queries excluded from the means", run_tag, excluded)
    return MetricReport(
        run_tag=run_tag,
        config=config or {},
        per_query=per_query,
        aggregates=aggregates,
        included=included,
        excluded=excluded,
        correlations=correlate(run_tag, per_query),
    )


def compare(reports: Sequence[MetricReport]) -> StatsReport:
    """Paired t-tests of every run against the first one, Bonferroni corrected.

    Tests use the queries where the measure is defined in both runs; m is the
    number of tests which could be performed.
    """
    baseline = reports[0]
    base_values = {q.query_id: q for q in baseline.per_query if not q.excluded}
    t_tests: list[TTestResult] = []
    for report in reports[1:]:
        other = {q.query_id: q for q in report.per_query if not q.excluded}
        common = sorted(set(base_values) & set(other))
        for metric in COMPARED_METRICS:
            if metric not in report.aggregates or metric not in baseline.aggregates:
                continue
            a = [getattr(other[q], metric) for q in common]
            b = [getattr(base_values[q], metric) for q in common]
            try:
                result = paired_t_test(a, b)
            except StatisticsError as e:
                LOG.warning(
                    "%s vs %s on %s: %s",
                    report.run_tag,
                    baseline.run_tag,
                    metric,
                    e.detail,
                )
                continue
            result.metric = metric
            result.baseline = baseline.run_tag
            result.run_tag = report.run_tag
            t_tests.append(result)

    m = len(t_tests)
    for result, adjusted in zip(t_tests, bonferroni([t.p_value for t in t_tests], m)):
        result.p_adjusted = adjusted
    return StatsReport(
        config=baseline.config,
        baseline=baseline.run_tag,
        aggregates={r.run_tag: r.aggregates for r in reports},
        excluded={r.run_tag: r.excluded for r in reports},
        correlations=[c for r in reports for c in r.correlations],
        t_tests=t_tests,
        bonferroni_m=m,
    )
