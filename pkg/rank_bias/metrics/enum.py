"""Fairness metrics specific enumerations."""
from enum import Enum


class Distance(str, Enum):
    """Distance between the normalized exposure and the target distribution."""

    TOTAL_VARIATION: str = "total_variation"
    L1: str = "l1"
    JENSEN_SHANNON: str = "jensen_shannon"

    @classmethod
    def _missing_(cls, value):
        value = str(value).lower().replace("-", "_")
        for member in cls:
            if member.value == value:
                return member
        return None
