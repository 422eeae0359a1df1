"""Pydantic models of the counterfactual reports and of the RBO configuration."""
from typing import Any, Dict

from pydantic import Field

from rank_bias.counterfactual.constants import (
    DOC_CHANGED,
    DOC_DEPTH,
    DOC_DOCUMENTS,
    DOC_MEAN,
    DOC_MISSING,
    DOC_P,
    DOC_PER_QUERY,
    DOC_SUBSTITUTIONS,
    DOC_VARIANT,
)
from rank_bias.counterfactual.enum import RboVariant
from rank_bias.models import BaseReport, BaseSchema


class RboConfig(BaseSchema):
    """Rank-biased overlap parameters.

    Attributes:
    ----------
        p (float): Persistence in (0,1).
        depth (int): Evaluation depth.
        variant (RboVariant): Truncated or extrapolated.
    """

    p: float = Field(default=0.9, gt=0, lt=1, description=DOC_P)
    depth: int = Field(default=10, ge=1, description=DOC_DEPTH)
    variant: RboVariant = Field(
        default=RboVariant.EXTRAPOLATED, description=DOC_VARIANT
    )


class TransformReport(BaseReport):
    """Outcome of the rewriting of a collection.

    Attributes:
    ----------
        documents (int): Rewritten documents.
        changed (int): Documents with at least one substitution.
        substitutions (dict): 'source->counterpart' to count.
    """

    documents: int = Field(default=0, ge=0, description=DOC_DOCUMENTS)
    changed: int = Field(default=0, ge=0, description=DOC_CHANGED)
    substitutions: Dict[str, int] = Field(
        default_factory=dict, description=DOC_SUBSTITUTIONS
    )


class CrboReport(BaseReport):
    """Rank-biased overlap between original and counterfactual rankings.

    Attributes:
    ----------
        per_query (dict): Query id to RBO, in query id order.
        mean (float): Mean over the compared queries.
        missing_queries (list of str): Queries in only one run.
        config (dict): Effective settings.
    """

    per_query: Dict[str, float] = Field(description=DOC_PER_QUERY)
    mean: float = Field(ge=0, le=1, description=DOC_MEAN)
    missing_queries: list[str] = Field(default_factory=list, description=DOC_MISSING)
    config: Dict[str, Any] = Field(default_factory=dict)
