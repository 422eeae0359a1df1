"""Pydantic models of the per-document statistics."""
from typing import Any, Dict

from pydantic import Field, root_validator

from rank_bias.corpus.constants import DOC_DOC_ID, DOC_LENGTH, DOC_MAGNITUDES
from rank_bias.models import BaseSchema


class DocStats(BaseSchema):
    """Statistics of a single document.

    Attributes:
    ----------
        doc_id (str): Document unique ID.
        length (int): Number of tokens.
        magnitudes (dict): Group id to total frequency of its terms.
    """

    doc_id: str = Field(description=DOC_DOC_ID)
    length: int = Field(ge=0, description=DOC_LENGTH)
    magnitudes: Dict[str, int] = Field(description=DOC_MAGNITUDES)

    @root_validator(skip_on_failure=True)
    def check_magnitudes(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        """Magnitudes are non negative and their sum does not exceed the length."""
        mags = values["magnitudes"]
        assert all(m >= 0 for m in mags.values()), "Negative magnitude"
        assert sum(mags.values()) <= values["length"], "Magnitudes exceed length"
        return values

    @property
    def total(self) -> int:
        """Occurrences of representative terms of any group."""
        return sum(self.magnitudes.values())

    @property
    def is_representative(self) -> bool:
        """The document contains at least one group representative term."""
        return self.total >= 1
