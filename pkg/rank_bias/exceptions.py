"""Errors raised by the library and mapped to exit codes by the command line."""


class RankBiasError(Exception):
    """Base error. It carries a human readable detail and the process exit code.

    Attributes:
    ----------
        detail (str): Message shown to the user.
        exit_code (int): Exit code returned by the command line.
    """

    exit_code: int = 1

    def __init__(self, detail: str) -> None:
        super().__init__(detail)
        self.detail = detail


class ArtifactIOError(RankBiasError):
    """A file could not be read or written."""

    exit_code = 1


class InvalidInputError(RankBiasError):
    """Input data violates a format rule or a domain invariant."""

    exit_code = 2


class LexiconError(InvalidInputError):
    """Malformed or inconsistent group lexicon."""


class CdsMappingError(InvalidInputError):
    """Malformed or non involutory counterfactual mapping."""


class CollectionError(InvalidInputError):
    """Malformed document collection."""


class RunFormatError(InvalidInputError):
    """Malformed TREC run, qrels or query set file."""


class IndexFormatError(InvalidInputError):
    """Corpus index with wrong format version or failed checksum."""


class FingerprintError(InvalidInputError):
    """Corpus index built with a different lexicon or tokenizer."""


class MissingDocumentsError(InvalidInputError):
    """Ranked documents not present in the corpus index."""

    def __init__(self, missing: list[str]) -> None:
        self.missing = sorted(set(missing))
        shown = ", ".join(self.missing[:20])
        more = f" (and {len(self.missing) - 20} more)" if len(self.missing) > 20 else ""
        super().__init__(f"Documents not found in index: {shown}{more}")


class DegenerateBackgroundError(InvalidInputError):
    """The background set has zero ideal fairness."""


class StatisticsError(InvalidInputError):
    """Statistical test received unusable input."""
