"""Module with Read and Write operations for TREC runs, qrels and query sets."""
import logging
import math
from collections.abc import Iterable, Mapping
from pathlib import Path
from typing import Dict, Optional

from pydantic import ValidationError

from rank_bias.crud import FileManagerBase
from rank_bias.exceptions import RunFormatError
from rank_bias.pool import ordered_map
from rank_bias.rankings.constants import DEFAULT_RUN_TAG, QRELS_COLUMNS, RUN_COLUMNS
from rank_bias.rankings.schemas import Qrels, RankedList

LOG = logging.getLogger(__name__)

Run = Dict[str, RankedList]


class RunManager(FileManagerBase[Run]):
    """TREC run read and write operations.

    Attributes:
    ----------
        tag (str): Run tag written in the last column.
    """

    def __init__(self, tag: str = DEFAULT_RUN_TAG) -> None:
        self.tag = tag

    def read(self, path: Path) -> Run:
        """Parse a TREC run `qid Q0 docid rank score tag`.

        The rank column is checked to be an integer and then ignored: each list
        is sorted by score descending, ties broken by ascending doc_id, and
        ranked again from 1.

        Args:
        ----
            path (Path): Run file, `.gz` accepted.

        Returns:
        -------
            dict. Query id to RankedList, in query id order.

        Raises:
        ------
            RunFormatError: Less than 6 columns, non numeric rank or score,
                duplicated (qid, docid) pair.
        """
        pairs: Dict[str, Dict[str, float]] = {}
        for lineno, line in self.iter_lines(path):
            cols = line.split()
            if len(cols) < RUN_COLUMNS:
                raise RunFormatError(
                    f"'{path}' line {lineno}: expected {RUN_COLUMNS} columns, "
                    f"found {len(cols)}"
                )
            query_id, _, doc_id, rank, score = cols[:5]
            try:
                int(rank)
                value = float(score)
            except ValueError as e:
                raise RunFormatError(
                    f"'{path}' line {lineno}: non numeric rank or score"
                ) from e
            if math.isnan(value):
                raise RunFormatError(f"'{path}' line {lineno}: score is NaN")
            docs = pairs.setdefault(query_id, {})
            if doc_id in docs:
                raise RunFormatError(
                    f"'{path}' line {lineno}: duplicate pair ({query_id}, {doc_id})"
                )
            docs[doc_id] = value
        return {
            query_id: ranked_list_from_scores(query_id, pairs[query_id])
            for query_id in sorted(pairs)
        }

    def dumps(self, obj: Run) -> str:
        """Serialize ranked lists to the TREC run format."""
        lines = [
            f"{lst.query_id} Q0 {e.doc_id} {e.rank} {e.score!r} {self.tag}"
            for _, lst in sorted(obj.items())
            for e in lst.entries
        ]
        return "".join(f"{line}\n" for line in lines)


class QrelsManager(FileManagerBase[Qrels]):
    """TREC qrels read operations."""

    def read(self, path: Path) -> Qrels:
        """Parse TREC qrels `qid 0 docid grade`.

        Repeated pairs keep the last grade and a warning is logged.

        Raises:
        ------
            RunFormatError: Wrong number of columns or invalid grade.
        """
        grades: Dict[str, Dict[str, int]] = {}
        for lineno, line in self.iter_lines(path):
            cols = line.split()
            if len(cols) != QRELS_COLUMNS:
                raise RunFormatError(
                    f"'{path}' line {lineno}: expected qid 0 docid grade"
                )
            query_id, _, doc_id, grade = cols
            try:
                value = int(grade)
            except ValueError as e:
                raise RunFormatError(
                    f"'{path}' line {lineno}: grade '{grade}' is not an integer"
                ) from e
            if value < 0:
                raise RunFormatError(f"'{path}' line {lineno}: negative grade")
            docs = grades.setdefault(query_id, {})
            if doc_id in docs:
                LOG.warning(
                    "%s line %d: repeated pair (%s, %s), keeping grade %d",
                    path,
                    lineno,
                    query_id,
                    doc_id,
                    value,
                )
            docs[doc_id] = value
        return Qrels(grades=grades)


class QuerySetManager(FileManagerBase[list[str]]):
    """Query set read and write operations.

    The query id is the first column of each line, so both plain id lists and
    `qid<TAB>text` query files are accepted.
    """

    comment_prefix = "#"

    def read(self, path: Path) -> list[str]:
        """Return the query ids in file order, without repetitions."""
        found: Dict[str, None] = {}
        for _, line in self.iter_lines(path):
            found.setdefault(line.split()[0], None)
        return list(found)

    def dumps(self, obj: list[str]) -> str:
        """One query id per line."""
        return "".join(f"{query_id}\n" for query_id in obj)


def ranked_list_from_scores(query_id: str, scores: Mapping[str, float]) -> RankedList:
    """Order documents by score descending then doc_id ascending."""
    ordered = sorted(scores.items(), key=lambda item: (-item[1], item[0]))
    try:
        return RankedList(
            query_id=query_id,
            doc_ids=tuple(d for d, _ in ordered),
            scores=tuple(s for _, s in ordered),
        )
    except ValidationError as e:
        raise RunFormatError(f"Invalid ranked list for query '{query_id}': {e}") from e


def truncate(ranked_list: RankedList, k: int) -> RankedList:
    """Keep the first min(k, n) entries.

    Args:
    ----
        ranked_list (RankedList): Full list.
        k (int): Cut-off, >= 1.

    Returns:
    -------
        RankedList.
    """
    if k < 1:
        raise ValueError("Cut-off must be >= 1")
    if k >= len(ranked_list.doc_ids):
        return ranked_list
    # A prefix of a valid list is valid.
    return RankedList.construct(
        query_id=ranked_list.query_id,
        doc_ids=ranked_list.doc_ids[:k],
        scores=ranked_list.scores[:k],
    )


def restrict(run: Run, query_ids: Optional[Iterable[str]]) -> Run:
    """Keep only the queries of the given set; every query when it is None."""
    if query_ids is None:
        return run
    wanted = set(query_ids)
    absent = wanted.difference(run)
    if absent:
        LOG.warning("%d queries of the query set are not in the run", len(absent))
    return {query_id: lst for query_id, lst in run.items() if query_id in wanted}


run_mng = RunManager()
qrels_mng = QrelsManager()
query_set_mng = QuerySetManager()


def parse_run(path: Path) -> Run:
    """Parse a TREC run file into per query ranked lists."""
    run = run_mng.read(Path(path))
    LOG.info("Parsed run %s with %d queries", path, len(run))
    return run


def parse_runs(paths: Iterable[Path], *, workers: int = 1) -> list[Run]:
    """Parse several run files in parallel, results in input order."""
    return list(ordered_map(parse_run, [Path(p) for p in paths], workers=workers))


def write_run(runs: Run, path: Path, tag: str = DEFAULT_RUN_TAG) -> Path:
    """Write ranked lists in TREC run format."""
    return RunManager(tag=tag).write(runs, Path(path))


def parse_qrels(path: Path) -> Qrels:
    """Parse a TREC qrels file."""
    return qrels_mng.read(Path(path))


def parse_query_set(path: Path) -> list[str]:
    """Parse a query set file."""
    query_ids = query_set_mng.read(Path(path))
    if not query_ids:
        raise RunFormatError(f"Query set '{path}' is empty")
    return query_ids
