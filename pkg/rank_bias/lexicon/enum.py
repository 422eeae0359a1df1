"""Lexicon specific enumerations."""
from enum import Enum


class PosTag(str, Enum):
    """Part of speech of an ambiguous pronoun."""

    POSS: str = "POSS"
    PRON: str = "PRON"

    @classmethod
    def _missing_(cls, value):
        value = str(value).upper()
        for member in cls:
            if member.value == value:
                return member
        return None
