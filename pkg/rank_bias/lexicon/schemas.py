"""Pydantic models of the group lexicon and of the counterfactual mapping."""
import hashlib
import json
from typing import Any, Dict, FrozenSet, Optional

import numpy as np
from pydantic import Field, root_validator, validator

from rank_bias.corpus.tokenizer import tokenize
from rank_bias.lexicon.constants import (
    DOC_GROUP_ID,
    DOC_GROUPS,
    DOC_NAME_PAIRS,
    DOC_POS_PAIRS,
    DOC_TARGET,
    DOC_TERM_PAIRS,
    DOC_TERMS,
    TARGET_TOLERANCE,
)
from rank_bias.lexicon.enum import PosTag
from rank_bias.models import BaseSchema


def check_token(term: str) -> None:
    """Raise when the tokenizer would never produce the term."""
    assert term, "Empty term"
    assert term == term.lower(), f"Term '{term}' is not lowercase"
    assert tokenize(term) == [term], f"Term '{term}' is not a single token"


class LexiconGroup(BaseSchema):
    """A societal group and its representative terms.

    Attributes:
    ----------
        group_id (str): Group unique name.
        terms (frozenset of str): Lowercase representative terms.
    """

    group_id: str = Field(min_length=1, description=DOC_GROUP_ID)
    terms: FrozenSet[str] = Field(description=DOC_TERMS)

    @validator("terms")
    @classmethod
    def single_token_terms(cls, v: FrozenSet[str]) -> FrozenSet[str]:
        """Every term is a single lowercase token."""
        for term in v:
            check_token(term)
        return v


class GroupLexicon(BaseSchema):
    """Named groups with their representative terms and target distribution.

    When the target is not given it defaults to the uniform distribution.

    Attributes:
    ----------
        groups (list of LexiconGroup): Ordered groups.
        target (dict): Group id to target probability.
    """

    groups: list[LexiconGroup] = Field(min_items=2, description=DOC_GROUPS)
    target: Dict[str, float] = Field(default_factory=dict, description=DOC_TARGET)

    @validator("groups")
    @classmethod
    def disjoint_groups(cls, v: list[LexiconGroup]) -> list[LexiconGroup]:
        """Group ids are unique and term sets pairwise disjoint."""
        ids = [g.group_id for g in v]
        assert len(set(ids)) == len(ids), "Duplicated group ids"
        owner: Dict[str, str] = {}
        for group in v:
            for term in sorted(group.terms):
                if term in owner:
                    raise ValueError(
                        f"term '{term}' in multiple groups: "
                        f"'{owner[term]}' and '{group.group_id}'"
                    )
                owner[term] = group.group_id
        return v

    @validator("target", always=True)
    @classmethod
    def valid_target(
        cls, v: Dict[str, float], values: Dict[str, Any]
    ) -> Dict[str, float]:
        """Target covers every group, each value in (0,1), summing to 1."""
        groups = values.get("groups")
        if groups is None:
            return v
        ids = [g.group_id for g in groups]
        if not v:
            return {i: 1 / len(ids) for i in ids}
        assert set(v) == set(ids), f"Target groups {sorted(v)} differ from {ids}"
        for group_id, p in v.items():
            assert 0 < p < 1, f"Target of '{group_id}' must be in (0,1)"
        assert abs(sum(v.values()) - 1) <= TARGET_TOLERANCE, "Target must sum to 1"
        return {i: v[i] for i in ids}

    @property
    def group_ids(self) -> list[str]:
        """Group ids in lexicon order."""
        return [g.group_id for g in self.groups]

    def term_groups(self) -> Dict[str, int]:
        """Map every term to the position of its group."""
        return {t: i for i, g in enumerate(self.groups) for t in g.terms}

    def target_vector(self) -> np.ndarray:
        """Target probabilities in lexicon order."""
        return np.array([self.target[i] for i in self.group_ids], dtype=float)

    def fingerprint(self) -> str:
        """Hash identifying the group term sets, independent of the target."""
        payload = json.dumps(
            [[g.group_id, sorted(g.terms)] for g in self.groups],
            ensure_ascii=False,
            separators=(",", ":"),
        )
        return hashlib.sha256(payload.encode("utf-8")).hexdigest()

    def to_json_dict(self) -> Dict[str, Any]:
        """Lexicon JSON format representation."""
        return {
            "groups": {g.group_id: sorted(g.terms) for g in self.groups},
            "target": dict(self.target),
        }


class CdsMapping(BaseSchema):
    """Counterfactual substitutions of group terms and names.

    Part-of-speech sensitive terms (e.g. "her") have one counterpart per tag.

    Attributes:
    ----------
        term_pairs (dict): Term to counterpart.
        name_pairs (dict): Name to opposite group name.
        pos_pairs (dict): Term to a tag-indexed counterpart map.
    """

    term_pairs: Dict[str, str] = Field(default_factory=dict, description=DOC_TERM_PAIRS)
    name_pairs: Dict[str, str] = Field(default_factory=dict, description=DOC_NAME_PAIRS)
    pos_pairs: Dict[str, Dict[PosTag, str]] = Field(
        default_factory=dict, description=DOC_POS_PAIRS
    )

    @validator("term_pairs", "name_pairs")
    @classmethod
    def single_token_pairs(cls, v: Dict[str, str]) -> Dict[str, str]:
        """Keys and counterparts are single lowercase tokens."""
        for src, dst in v.items():
            check_token(src)
            check_token(dst)
        return v

    @validator("pos_pairs")
    @classmethod
    def single_token_pos_pairs(
        cls, v: Dict[str, Dict[PosTag, str]]
    ) -> Dict[str, Dict[PosTag, str]]:
        """Keys and counterparts are single lowercase tokens."""
        for src, by_tag in v.items():
            check_token(src)
            for dst in by_tag.values():
                check_token(dst)
        return v

    @root_validator(skip_on_failure=True)
    def check_involution(cls, values: Dict[str, Any]) -> Dict[str, Any]:
        """Applying a substitution twice returns the original token."""
        term_pairs = values["term_pairs"]
        name_pairs = values["name_pairs"]
        pos_pairs = values["pos_pairs"]
        overlap = set(term_pairs) & set(pos_pairs)
        overlap |= set(name_pairs) & set(term_pairs)
        overlap |= set(name_pairs) & set(pos_pairs)
        assert not overlap, f"Duplicated keys: {sorted(overlap)}"

        def back(src: str, dst: str, tag: Optional[PosTag]) -> None:
            if dst in pos_pairs:
                if tag is None:
                    ok = src in pos_pairs[dst].values()
                else:
                    ok = pos_pairs[dst].get(tag) == src
            else:
                ok = term_pairs.get(dst) == src
            if not ok:
                raise ValueError(
                    f"Non involutory pair: '{src}' -> '{dst}' is not reversed"
                )

        for src, dst in term_pairs.items():
            back(src, dst, None)
        for src, by_tag in pos_pairs.items():
            for tag, dst in by_tag.items():
                back(src, dst, tag)
        for src, dst in name_pairs.items():
            if name_pairs.get(dst) != src:
                raise ValueError(
                    f"Non involutory name pair: '{src}' -> '{dst}' is not reversed"
                )
        return values

    @property
    def pos_sensitive(self) -> FrozenSet[str]:
        """Terms whose substitution depends on the part of speech."""
        return frozenset(self.pos_pairs)

    def counterpart(self, token: str, tag: Optional[PosTag] = None) -> Optional[str]:
        """Return the lowercase counterpart of a lowercase token, or None.

        Args:
        ----
            token (str): Lowercase token.
            tag (PosTag | None): Part of speech, used only by sensitive terms.

        Returns:
        -------
            str | None.
        """
        by_tag = self.pos_pairs.get(token)
        if by_tag is not None:
            if tag is None or tag not in by_tag:
                tag = PosTag.POSS if PosTag.POSS in by_tag else next(iter(by_tag))
            return by_tag[tag]
        found = self.term_pairs.get(token)
        if found is not None:
            return found
        return self.name_pairs.get(token)

    def uncovered_terms(self, lexicon: GroupLexicon) -> list[str]:
        """Mapping terms, names excluded, which are not in any lexicon group."""
        known = set(lexicon.term_groups())
        terms = set(self.term_pairs) | set(self.term_pairs.values())
        terms |= set(self.pos_pairs)
        terms |= {t for by_tag in self.pos_pairs.values() for t in by_tag.values()}
        return sorted(terms - known)

    @property
    def size(self) -> int:
        """Number of keys of the mapping."""
        return len(self.term_pairs) + len(self.name_pairs) + len(self.pos_pairs)
