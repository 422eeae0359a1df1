import logging
from pathlib import Path

import pytest
from pydantic import ValidationError
from pytest_cases import case, parametrize, parametrize_with_cases

from rank_bias.exceptions import RunFormatError
from rank_bias.rankings.crud import (
    parse_qrels,
    parse_query_set,
    parse_run,
    parse_runs,
    restrict,
    truncate,
    write_run,
)
from rank_bias.rankings.schemas import RankedList
from tests.utils import ranked


class CaseInvalidRun:
    @case(tags=["run"])
    def case_columns(self) -> tuple[str, str]:
        return "q1 Q0 d1 1 3.0\n", "expected 6 columns"

    @case(tags=["run"])
    def case_rank(self) -> tuple[str, str]:
        return "q1 Q0 d1 first 3.0 tag\n", "non numeric"

    @case(tags=["run"])
    def case_score(self) -> tuple[str, str]:
        return "q1 Q0 d1 1 high tag\n", "non numeric"

    @case(tags=["run"])
    def case_nan(self) -> tuple[str, str]:
        return "q1 Q0 d1 1 nan tag\n", "NaN"

    @case(tags=["run"])
    def case_duplicate(self) -> tuple[str, str]:
        return "q1 Q0 d1 1 3.0 t\nq1 Q0 d1 2 1.0 t\n", r"duplicate pair \(q1, d1\)"


class CaseInvalidQrels:
    def case_columns(self) -> tuple[str, str]:
        return "q1 0 d1\n", "expected qid 0 docid grade"

    def case_grade(self) -> tuple[str, str]:
        return "q1 0 d1 yes\n", "not an integer"

    def case_negative(self) -> tuple[str, str]:
        return "q1 0 d1 -1\n", "negative grade"


def test_parse_run_orders_by_score(tmp_path: Path) -> None:
    path = tmp_path / "run.txt"
    path.write_text("q1 Q0 d2 2 1.0 tag\nq1 Q0 d1 1 3.0 tag\nq0 Q0 d3 1 0.5 tag\n")
    run = parse_run(path)
    assert list(run) == ["q0", "q1"]
    assert run["q1"].doc_ids == ("d1", "d2")
    assert [e.rank for e in run["q1"].entries] == [1, 2]


def test_parse_run_ties(tmp_path: Path) -> None:
    path = tmp_path / "run.txt"
    path.write_text("q1 Q0 dz 1 2.0 t\nq1 Q0 da 2 2.0 t\nq1 Q0 dm 3 2.0 t\n")
    assert parse_run(path)["q1"].doc_ids == ("da", "dm", "dz")
    assert parse_run(path) == parse_run(path)


@parametrize_with_cases("content, msg", cases=CaseInvalidRun, has_tag="run")
def test_invalid_run(tmp_path: Path, content: str, msg: str) -> None:
    path = tmp_path / "run.txt"
    path.write_text(content)
    with pytest.raises(RunFormatError, match=msg):
        parse_run(path)


def test_run_round_trip(tmp_path: Path) -> None:
    runs = {
        "q1": RankedList(query_id="q1", doc_ids=("a", "b"), scores=(2.5, 0.1)),
        "q2": RankedList(query_id="q2", doc_ids=("c",), scores=(-1.0,)),
    }
    path = write_run(runs, tmp_path / "run.txt", tag="bm25")
    assert path.read_text().splitlines()[0] == "q1 Q0 a 1 2.5 bm25"
    assert parse_run(path) == runs


def test_parse_runs_keeps_order(tmp_path: Path) -> None:
    paths = []
    for i in range(3):
        path = tmp_path / f"run{i}.txt"
        path.write_text(f"q{i} Q0 d{i} 1 1.0 t\n")
        paths.append(path)
    runs = parse_runs(paths, workers=2)
    assert [list(r) for r in runs] == [["q0"], ["q1"], ["q2"]]


def test_parse_qrels(tmp_path: Path, caplog: pytest.LogCaptureFixture) -> None:
    path = tmp_path / "qrels.txt"
    path.write_text("q1 0 d9 1\nq1 0 d8 0\nq1 0 d9 2\n")
    with caplog.at_level(logging.WARNING):
        qrels = parse_qrels(path)
    assert qrels.get("q1", "d9") == 2
    assert qrels.get("q1", "d8") == 0
    assert qrels.get("q2", "d9") is None
    assert "repeated pair" in caplog.text


@parametrize_with_cases("content, msg", cases=CaseInvalidQrels)
def test_invalid_qrels(tmp_path: Path, content: str, msg: str) -> None:
    path = tmp_path / "qrels.txt"
    path.write_text(content)
    with pytest.raises(RunFormatError, match=msg):
        parse_qrels(path)


def test_query_set(tmp_path: Path) -> None:
    path = tmp_path / "queries.tsv"
    path.write_text("# neutral queries\nq2\twhat is a nurse\nq1\nq2\tagain\n")
    assert parse_query_set(path) == ["q2", "q1"]


def test_empty_query_set(tmp_path: Path) -> None:
    path = tmp_path / "queries.tsv"
    path.write_text("# nothing\n")
    with pytest.raises(RunFormatError, match="empty"):
        parse_query_set(path)


def test_restrict() -> None:
    run = {"q1": ranked("q1", "a"), "q2": ranked("q2", "b")}
    assert list(restrict(run, ["q2", "q3"])) == ["q2"]
    assert restrict(run, None) is run


@parametrize("n, k, expected", [(1000, 10, 10), (3, 10, 3), (5, 1, 1), (5, 5, 5)])
def test_truncate(n: int, k: int, expected: int) -> None:
    lst = ranked("q", *(f"d{i}" for i in range(n)))
    top = truncate(lst, k)
    assert len(top.doc_ids) == expected
    assert top.doc_ids == lst.doc_ids[:expected]
    assert top.scores == lst.scores[:expected]


def test_truncate_invalid_k() -> None:
    with pytest.raises(ValueError):
        truncate(ranked("q", "a"), 0)


def test_ranked_list_validation() -> None:
    with pytest.raises(ValidationError, match="more than once"):
        RankedList(query_id="q", doc_ids=("a", "a"))
    with pytest.raises(ValidationError, match="greater than"):
        RankedList(query_id="q", doc_ids=("a", "b"), scores=(1.0, 2.0))
    with pytest.raises(ValidationError, match="One score per document"):
        RankedList(query_id="q", doc_ids=("a", "b"), scores=(1.0,))
    assert RankedList(query_id="q").doc_ids == ()
