"""Pydantic models of the fairness configuration and per query results."""
from typing import Dict, Optional

import numpy as np
from pydantic import Field, validator

from rank_bias.metrics.constants import (
    DOC_AWRF,
    DOC_EXCLUDED,
    DOC_FAIRR,
    DOC_K,
    DOC_LOG_BASE,
    DOC_NFAIRR,
    DOC_QUERY_ID,
    DOC_RBDF,
    DOC_REPRESENTATION,
    DOC_TARGET,
    DOC_TAU,
    DOC_TED,
    DOC_TEXFAIR,
    DOC_TEXFAIR_NO_RBDF,
    DOC_UNDEFINED,
    TARGET_TOLERANCE,
)
from rank_bias.models import BaseReport, BaseSchema


class FairnessConfig(BaseSchema):
    """Parameters shared by all fairness measures.

    The target keys order is the group order of every group vector.

    Attributes:
    ----------
        k (int): Ranking cut-off.
        tau (int): Neutrality threshold.
        log_base (float): Position bias logarithm base.
        target (dict): Group id to target probability.
    """

    k: int = Field(default=10, ge=1, description=DOC_K)
    tau: int = Field(default=0, ge=0, description=DOC_TAU)
    log_base: float = Field(default=2.0, gt=1, description=DOC_LOG_BASE)
    target: Dict[str, float] = Field(description=DOC_TARGET)

    @validator("target")
    @classmethod
    def valid_distribution(cls, v: Dict[str, float]) -> Dict[str, float]:
        """At least two groups, probabilities in [0,1] summing to 1."""
        assert len(v) >= 2, "Target needs at least two groups"
        for group_id, p in v.items():
            assert 0 <= p <= 1, f"Target of '{group_id}' must be in [0,1]"
        assert abs(sum(v.values()) - 1) <= TARGET_TOLERANCE, "Target must sum to 1"
        return v

    @property
    def group_ids(self) -> list[str]:
        """Group order."""
        return list(self.target)

    def target_vector(self) -> np.ndarray:
        """Target probabilities in group order."""
        return np.fromiter(self.target.values(), dtype=float, count=len(self.target))

    def position_bias(self, n: int) -> np.ndarray:
        """Attention weights 1/log(r+1) of ranks 1..n."""
        return np.log(self.log_base) / np.log(np.arange(2, n + 2, dtype=float))

    def with_k(self, k: int) -> "FairnessConfig":
        """Copy with a different cut-off."""
        return FairnessConfig(
            k=k, tau=self.tau, log_base=self.log_base, target=self.target
        )


class QueryFairness(BaseReport):
    """Fairness measures of a single ranked list.

    Values are None when undefined. An excluded query has every value None.

    Attributes:
    ----------
        query_id (str): Query unique ID.
        fairr (float | None): FaiRR.
        nfairr (float | None): NFaiRR.
        texfair (float | None): TExFAIR.
        texfair_no_rbdf (float | None): TExFAIR without RBDF.
        ted (float | None): TED with RBDF.
        rbdf (float | None): RBDF.
        awrf_doc (float | None): AWRF with term based document associations.
        group_representation (dict | None): Group id to representation.
        undefined_representation (bool): No group term in the top-k.
        excluded (bool): Query left out of the aggregates.
    """

    query_id: str = Field(description=DOC_QUERY_ID)
    fairr: Optional[float] = Field(default=None, description=DOC_FAIRR)
    nfairr: Optional[float] = Field(default=None, description=DOC_NFAIRR)
    texfair: Optional[float] = Field(default=None, description=DOC_TEXFAIR)
    texfair_no_rbdf: Optional[float] = Field(
        default=None, description=DOC_TEXFAIR_NO_RBDF
    )
    ted: Optional[float] = Field(default=None, description=DOC_TED)
    rbdf: Optional[float] = Field(default=None, description=DOC_RBDF)
    awrf_doc: Optional[float] = Field(default=None, description=DOC_AWRF)
    group_representation: Optional[Dict[str, float]] = Field(
        default=None, description=DOC_REPRESENTATION
    )
    undefined_representation: bool = Field(default=False, description=DOC_UNDEFINED)
    excluded: bool = Field(default=False, description=DOC_EXCLUDED)

    @classmethod
    def excluded_query(cls, query_id: str) -> "QueryFairness":
        """Query with every measure undefined."""
        return cls(query_id=query_id, undefined_representation=True, excluded=True)
