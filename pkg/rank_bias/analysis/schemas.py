"""Pydantic models of the evaluation reports."""
from typing import Any, Dict, Optional

from pydantic import Field

from rank_bias.analysis.constants import (
    DOC_AGGREGATES,
    DOC_CONFIG,
    DOC_EXCLUDED,
    DOC_INCLUDED,
    DOC_MRR,
    DOC_NDCG,
    DOC_PER_QUERY,
    DOC_RUN_TAG,
)
from rank_bias.metrics.schemas import QueryFairness
from rank_bias.models import BaseReport


class QueryEvaluation(QueryFairness):
    """Fairness and effectiveness measures of a single ranked list.

    Attributes:
    ----------
        mrr (float | None): Reciprocal rank, None without relevance judgements.
        ndcg (float | None): nDCG, None without relevance judgements.
    """

    mrr: Optional[float] = Field(default=None, description=DOC_MRR)
    ndcg: Optional[float] = Field(default=None, description=DOC_NDCG)


class CorrelationResult(BaseReport):
    """Pearson correlation between two measures on the query level.

    Attributes:
    ----------
        run_tag (str | None): Evaluated run.
        x (str | None): First measure.
        y (str | None): Second measure.
        n (int): Number of pairs.
        r (float | None): Correlation, None when a measure has zero variance.
        p_value (float | None): Two sided p-value.
    """

    run_tag: Optional[str] = None
    x: Optional[str] = None
    y: Optional[str] = None
    n: int = Field(ge=0)
    r: Optional[float] = None
    p_value: Optional[float] = None


class TTestResult(BaseReport):
    """Paired t-test between two runs on a measure.

    Attributes:
    ----------
        metric (str | None): Compared measure.
        baseline (str | None): Baseline run.
        run_tag (str | None): Compared run.
        n (int): Number of pairs.
        mean_difference (float): Mean of run minus baseline.
        t (float | None): Statistic, None when undefined.
        p_value (float | None): Two sided p-value, None for zero variance.
        p_adjusted (float | None): Bonferroni adjusted p-value.
        zero_variance (bool): The differences are all equal.
    """

    metric: Optional[str] = None
    baseline: Optional[str] = None
    run_tag: Optional[str] = None
    n: int = Field(ge=0)
    mean_difference: float
    t: Optional[float] = None
    p_value: Optional[float] = None
    p_adjusted: Optional[float] = None
    zero_variance: bool = False


class MetricReport(BaseReport):
    """Evaluation of a run.

    Attributes:
    ----------
        run_tag (str): Run name.
        config (dict): Effective settings.
        per_query (list of QueryEvaluation): Per query measures.
        aggregates (dict): Measure to mean over the queries where defined.
        included (dict): Measure to number of queries in its mean.
        excluded (int): Queries excluded from every mean.
        correlations (list of CorrelationResult): Query level correlations.
    """

    run_tag: str = Field(description=DOC_RUN_TAG)
    config: Dict[str, Any] = Field(default_factory=dict, description=DOC_CONFIG)
    per_query: list[QueryEvaluation] = Field(
        default_factory=list, description=DOC_PER_QUERY
    )
    aggregates: Dict[str, Optional[float]] = Field(
        default_factory=dict, description=DOC_AGGREGATES
    )
    included: Dict[str, int] = Field(default_factory=dict, description=DOC_INCLUDED)
    excluded: int = Field(default=0, ge=0, description=DOC_EXCLUDED)
    correlations: list[CorrelationResult] = Field(default_factory=list)


class StatsReport(BaseReport):
    """Content of stats.json.

    Attributes:
    ----------
        config (dict): Effective settings.
        baseline (str): First run, compared with the others.
        aggregates (dict): Run tag to measure means.
        excluded (dict): Run tag to excluded queries.
        correlations (list of CorrelationResult): Per run correlations.
        t_tests (list of TTestResult): Paired t-tests against the baseline.
        bonferroni_m (int): Number of tests used by the correction.
    """

    config: Dict[str, Any] = Field(default_factory=dict)
    baseline: str
    aggregates: Dict[str, Dict[str, Optional[float]]] = Field(default_factory=dict)
    excluded: Dict[str, int] = Field(default_factory=dict)
    correlations: list[CorrelationResult] = Field(default_factory=list)
    t_tests: list[TTestResult] = Field(default_factory=list)
    bonferroni_m: int = Field(default=0, ge=0)
