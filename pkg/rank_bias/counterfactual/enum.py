"""Counterfactual specific enumerations."""
from enum import Enum


class RboVariant(str, Enum):
    """Rank-biased overlap series evaluation."""

    EXTRAPOLATED: str = "extrapolated"
    TRUNCATED: str = "truncated"

    @classmethod
    def _missing_(cls, value):
        value = str(value).lower()
        for member in cls:
            if member.value == value:
                return member
        return None
