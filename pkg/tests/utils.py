"""Tests utilities."""
import string
from random import Random, choices
from typing import Optional

from rank_bias.corpus.index import CorpusIndex
from rank_bias.corpus.schemas import DocStats
from rank_bias.corpus.tokenizer import TOKENIZER_ID
from rank_bias.rankings.schemas import RankedList

GROUPS = ["female", "male"]
FEMALE_TERMS = ["she", "her", "woman", "mother", "girl"]
MALE_TERMS = ["he", "him", "man", "father", "boy"]
OTHER_TERMS = ["they", "them", "theirs"]
FILLER_TERMS = ["the", "river", "cake", "market", "blue", "runs", "quickly", "on"]


def random_lower_string() -> str:
    """Return a generic random string."""
    return "".join(choices(string.ascii_lowercase, k=32))


def ranked(query_id: str, *doc_ids: str) -> RankedList:
    """Ranked list with decreasing pseudo scores."""
    return RankedList(query_id=query_id, doc_ids=doc_ids)


def index_from_counts(
    counts: dict[str, tuple[int, int, int]], group_ids: Optional[list[str]] = None
) -> CorpusIndex:
    """Build an index from doc_id -> (length, female count, male count)."""
    group_ids = group_ids or GROUPS
    stats = [
        DocStats(
            doc_id=doc_id,
            length=length,
            magnitudes=dict(zip(group_ids, mags)),
        )
        for doc_id, (length, *mags) in counts.items()
    ]
    return CorpusIndex.from_stats(
        stats,
        group_ids=group_ids,
        lexicon_fingerprint="test",
        tokenizer_id=TOKENIZER_ID,
    )


def random_text(rng: Random, max_tokens: int = 12) -> str:
    """Random text mixing group terms and filler words, possibly empty."""
    vocabulary = FEMALE_TERMS + MALE_TERMS + FILLER_TERMS * 2
    n = rng.randint(0, max_tokens)
    return " ".join(rng.choice(vocabulary) for _ in range(n))


def random_corpus(rng: Random, n_docs: int) -> dict[str, str]:
    """doc_id -> random text."""
    return {f"doc{i:04d}": random_text(rng) for i in range(n_docs)}


def random_micro_corpus(
    rng: Random, vocabulary: list[str], max_docs: int = 8, max_tokens: int = 6
) -> dict[str, str]:
    """A few short space separated documents, possibly empty."""
    n_docs = rng.randint(1, max_docs)
    return {
        f"m{i}": " ".join(rng.choices(vocabulary, k=rng.randint(0, max_tokens)))
        for i in range(n_docs)
    }
