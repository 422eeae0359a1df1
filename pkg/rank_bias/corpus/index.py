"""In-memory per-document statistics index."""
from collections.abc import Iterable, Iterator, Mapping, Sequence

import numpy as np

from rank_bias.corpus.schemas import DocStats
from rank_bias.exceptions import FingerprintError, MissingDocumentsError
from rank_bias.lexicon.schemas import GroupLexicon


class CorpusIndex(Mapping[str, DocStats]):
    """Document id to DocStats mapping backed by numpy arrays.

    Rows are sorted by doc_id, so two indexes built from the same documents are
    identical whatever the collection order. Instances are never modified after
    construction and can be shared between threads.

    Attributes:
    ----------
        doc_ids (list of str): Sorted document ids.
        lengths (np.ndarray): Token count per row.
        magnitudes (np.ndarray): Matrix rows x groups of term frequencies.
        group_ids (list of str): Column order of `magnitudes`.
        lexicon_fingerprint (str): Fingerprint of the lexicon used to build it.
        tokenizer_id (str): Tokenization rule used to build it.
    """

    def __init__(
        self,
        *,
        doc_ids: Sequence[str],
        lengths: np.ndarray,
        magnitudes: np.ndarray,
        group_ids: Sequence[str],
        lexicon_fingerprint: str,
        tokenizer_id: str,
    ) -> None:
        order = sorted(range(len(doc_ids)), key=doc_ids.__getitem__)
        self.doc_ids = [doc_ids[i] for i in order]
        self.lengths = np.asarray(lengths, dtype=np.int64)[order]
        mags = np.asarray(magnitudes, dtype=np.int64).reshape(
            len(order), len(group_ids)
        )
        self.magnitudes = mags[order]
        self.group_ids = list(group_ids)
        self.lexicon_fingerprint = lexicon_fingerprint
        self.tokenizer_id = tokenizer_id
        self._rows = {d: i for i, d in enumerate(self.doc_ids)}
        self.lengths.setflags(write=False)
        self.magnitudes.setflags(write=False)

    @classmethod
    def from_stats(
        cls,
        stats: Iterable[DocStats],
        *,
        group_ids: Sequence[str],
        lexicon_fingerprint: str,
        tokenizer_id: str,
    ) -> "CorpusIndex":
        """Build an index from DocStats objects."""
        stats = list(stats)
        return cls(
            doc_ids=[s.doc_id for s in stats],
            lengths=np.array([s.length for s in stats], dtype=np.int64),
            magnitudes=np.array(
                [[s.magnitudes.get(g, 0) for g in group_ids] for s in stats],
                dtype=np.int64,
            ).reshape(len(stats), len(group_ids)),
            group_ids=group_ids,
            lexicon_fingerprint=lexicon_fingerprint,
            tokenizer_id=tokenizer_id,
        )

    def __getitem__(self, doc_id: str) -> DocStats:
        row = self._rows[doc_id]
        return DocStats(
            doc_id=doc_id,
            length=int(self.lengths[row]),
            magnitudes={
                g: int(m) for g, m in zip(self.group_ids, self.magnitudes[row])
            },
        )

    def __iter__(self) -> Iterator[str]:
        return iter(self.doc_ids)

    def __len__(self) -> int:
        return len(self.doc_ids)

    def __contains__(self, doc_id: object) -> bool:
        return doc_id in self._rows

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CorpusIndex):
            return NotImplemented
        return (
            self.doc_ids == other.doc_ids
            and self.group_ids == other.group_ids
            and self.lexicon_fingerprint == other.lexicon_fingerprint
            and self.tokenizer_id == other.tokenizer_id
            and np.array_equal(self.lengths, other.lengths)
            and np.array_equal(self.magnitudes, other.magnitudes)
        )

    __hash__ = None

    @property
    def stats(self) -> Mapping[str, DocStats]:
        """Document id to DocStats view."""
        return self

    def rows(self, doc_ids: Iterable[str]) -> np.ndarray:
        """Return the row of every document id.

        Raises:
        ------
            MissingDocumentsError: Some ids are not indexed. All of them are
                listed.
        """
        doc_ids = list(doc_ids)
        missing = [d for d in doc_ids if d not in self._rows]
        if missing:
            raise MissingDocumentsError(missing)
        return np.fromiter(
            (self._rows[d] for d in doc_ids), dtype=np.int64, count=len(doc_ids)
        )

    def check_lexicon(self, lexicon: GroupLexicon) -> None:
        """Ensure the index was built with the given lexicon.

        Raises:
        ------
            FingerprintError: Lexicon term sets or group order differ.
        """
        if lexicon.fingerprint() != self.lexicon_fingerprint:
            raise FingerprintError(
                "Index was built with a different lexicon "
                f"(index {self.lexicon_fingerprint[:12]}, "
                f"lexicon {lexicon.fingerprint()[:12]})"
            )
        if lexicon.group_ids != self.group_ids:
            raise FingerprintError(
                f"Index groups {self.group_ids} differ from lexicon {lexicon.group_ids}"
            )
