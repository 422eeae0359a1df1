import logging

import pytest
from pytest_cases import parametrize

from rank_bias.corpus.index import CorpusIndex
from rank_bias.exceptions import DegenerateBackgroundError
from rank_bias.metrics.evaluate import (
    background_for,
    evaluate_query,
    evaluate_run,
    per_query_ifairr,
)
from rank_bias.metrics.fairness import awrf_doc, fairr, ifairr, texfair
from rank_bias.metrics.schemas import FairnessConfig
from rank_bias.rankings.crud import Run
from tests.utils import index_from_counts, ranked


def test_figure1_query(
    fig1_index: CorpusIndex, fig1_run: Run, cfg: FairnessConfig
) -> None:
    background = ifairr(fig1_index, cfg)
    left = evaluate_query(fig1_run["q_left"], fig1_index, background, cfg)
    assert left.query_id == "q_left"
    assert left.texfair == pytest.approx(0.8829, abs=1e-4)
    assert left.texfair_no_rbdf == pytest.approx(0.8829, abs=1e-4)
    assert left.rbdf == pytest.approx(1.0)
    assert left.nfairr == 0.0
    assert left.awrf_doc == pytest.approx(0.0585, abs=1e-4)
    assert not left.undefined_representation
    assert not left.excluded

    right = evaluate_query(fig1_run["q_right"], fig1_index, background, cfg)
    assert right.texfair == pytest.approx(0.0)
    assert right.nfairr == 0.0
    assert right.group_representation == pytest.approx({"female": 0.0, "male": 1.0})


@parametrize(workers=[1, 3])
def test_evaluate_run_matches_single_measures(
    fig1_index: CorpusIndex, fig1_run: Run, cfg: FairnessConfig, workers: int
) -> None:
    background = ifairr(fig1_index, cfg)
    results = evaluate_run(
        fig1_run, fig1_index, cfg, background=background, workers=workers
    )
    assert [r.query_id for r in results] == ["q_left", "q_right"]
    for result in results:
        ranked_list = fig1_run[result.query_id]
        assert result.fairr == pytest.approx(fairr(ranked_list, fig1_index, cfg))
        assert result.texfair == pytest.approx(texfair(ranked_list, fig1_index, cfg))
        assert result.awrf_doc == pytest.approx(
            awrf_doc(ranked_list, fig1_index, cfg)
        )


def test_empty_list_excluded(
    cfg: FairnessConfig, caplog: pytest.LogCaptureFixture
) -> None:
    index = index_from_counts({"a": (3, 0, 0)})
    with caplog.at_level(logging.WARNING):
        result = evaluate_query(ranked("q"), index, 1.0, cfg)
    assert result.excluded
    assert result.undefined_representation
    assert result.nfairr is None
    assert result.texfair is None
    assert "empty ranked list" in caplog.text


def test_undefined_representation(cfg: FairnessConfig) -> None:
    index = index_from_counts({"a": (3, 0, 0), "b": (4, 0, 0)})
    result = evaluate_query(ranked("q", "a", "b"), index, ifairr(index, cfg), cfg)
    assert result.undefined_representation
    assert not result.excluded
    assert result.group_representation is None
    assert result.texfair == pytest.approx(1.0)
    assert result.rbdf == 0.0
    assert result.nfairr == pytest.approx(1.0)


def test_missing_background_excludes_query(cfg: FairnessConfig) -> None:
    index = index_from_counts({"a": (3, 0, 0)})
    run = {"q1": ranked("q1", "a"), "q2": ranked("q2", "a")}
    results = evaluate_run(run, index, cfg, background={"q1": 1.0})
    assert not results[0].excluded
    assert results[1].excluded
    assert results[1].nfairr is None


def test_background_for() -> None:
    assert background_for(2.5, "q") == 2.5
    assert background_for({"q": 1.5}, "q") == 1.5
    with pytest.raises(DegenerateBackgroundError, match="q9"):
        background_for({"q": 1.5}, "q9")


def test_per_query_ifairr(cfg: FairnessConfig) -> None:
    index = index_from_counts(
        {"a": (3, 0, 2), "b": (8, 1, 3), "c": (3, 0, 0), "d": (3, 1, 1)}
    )
    background = {
        "q1": ranked("q1", "a", "b"),
        "q2": ranked("q2", "c", "d", "a"),
        "q3": ranked("q3"),
    }
    values = per_query_ifairr(background, index, cfg, ["q1", "q2", "q3", "q4"])
    assert set(values) == {"q1", "q2"}
    assert values["q1"] == pytest.approx(0.5)
    assert values["q2"] == pytest.approx(1 + 1 / 1.584962500721156)


def test_per_query_nfairr_normalizes_each_query(cfg: FairnessConfig) -> None:
    index = index_from_counts({"a": (3, 0, 0), "b": (3, 0, 1), "c": (3, 1, 1)})
    run = {"q1": ranked("q1", "a"), "q2": ranked("q2", "b", "c")}
    background = per_query_ifairr(run, index, cfg)
    results = evaluate_run(run, index, cfg, background=background)
    assert results[0].nfairr == pytest.approx(1.0)
    # c is neutral: the best ordering puts it first.
    assert results[1].nfairr == pytest.approx((1 / 1.584962500721156) / 1.0)
