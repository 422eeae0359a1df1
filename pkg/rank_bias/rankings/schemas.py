"""Pydantic models of ranked lists and relevance judgements."""
from typing import Any, Dict, NamedTuple, Optional, Tuple

from pydantic import Field, root_validator, validator

from rank_bias.models import BaseSchema
from rank_bias.rankings.constants import (
    DOC_DOC_IDS,
    DOC_GRADES,
    DOC_QUERY_ID,
    DOC_SCORES,
)


class RankedEntry(NamedTuple):
    """A retrieved document with its 1-based rank."""

    doc_id: str
    rank: int
    score: float


class RankedList(BaseSchema):
    """Ordered documents retrieved for a query.

    Ranks are implicit: the document at position i has rank i + 1.

    Attributes:
    ----------
        query_id (str): Query unique ID.
        doc_ids (tuple of str): Documents, best first.
        scores (tuple of float): Retrieval scores, not increasing.
    """

    query_id: str = Field(description=DOC_QUERY_ID)
    doc_ids: Tuple[str, ...] = Field(default=(), description=DOC_DOC_IDS)
    scores: Tuple[float, ...] = Field(default=(), description=DOC_SCORES)

    @validator("doc_ids")
    @classmethod
    def unique_documents(cls, v: Tuple[str, ...]) -> Tuple[str, ...]:
        """A document is retrieved at most once."""
        seen = set()
        for doc_id in v:
            if doc_id in seen:
                raise ValueError(f"Document '{doc_id}' retrieved more than once")
            seen.add(doc_id)
        return v

    @root_validator(skip_on_failure=True)
    def descending_scores(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        """One score per document, in not increasing order."""
        doc_ids, scores = values["doc_ids"], values["scores"]
        if not scores and doc_ids:
            # Lists built without scores get decreasing pseudo scores.
            n = len(doc_ids)
            values["scores"] = tuple(float(n - i) for i in range(n))
            return values
        assert len(scores) == len(doc_ids), "One score per document required"
        for i in range(1, len(scores)):
            assert scores[i - 1] >= scores[i], (
                f"Score at rank {i + 1} is greater than the one at rank {i}"
            )
        return values

    @property
    def entries(self) -> list[RankedEntry]:
        """Documents with ranks and scores."""
        return [
            RankedEntry(doc_id=d, rank=r, score=s)
            for r, (d, s) in enumerate(zip(self.doc_ids, self.scores), start=1)
        ]


class Qrels(BaseSchema):
    """Relevance judgements.

    Attributes:
    ----------
        grades (dict): Query id to document id to relevance grade.
    """

    grades: Dict[str, Dict[str, int]] = Field(
        default_factory=dict, description=DOC_GRADES
    )

    @validator("grades")
    @classmethod
    def non_negative_grades(
        cls, v: Dict[str, Dict[str, int]]
    ) -> Dict[str, Dict[str, int]]:
        """Relevance grades are integers >= 0."""
        for query_id, docs in v.items():
            for doc_id, grade in docs.items():
                assert grade >= 0, f"Negative grade for ({query_id}, {doc_id})"
        return v

    def for_query(self, query_id: str) -> Optional[Dict[str, int]]:
        """Judgements of a query, None when the query is not judged."""
        return self.grades.get(query_id)

    def get(self, query_id: str, doc_id: str) -> Optional[int]:
        """Grade of a (query, document) pair."""
        return self.grades.get(query_id, {}).get(doc_id)
