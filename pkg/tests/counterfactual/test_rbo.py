import logging
from itertools import permutations
from random import Random

import pytest
from pydantic import ValidationError
from pytest_cases import parametrize

from rank_bias.counterfactual.enum import RboVariant
from rank_bias.counterfactual.rbo import crbo, rbo
from rank_bias.counterfactual.schemas import RboConfig
from rank_bias.exceptions import InvalidInputError
from tests import oracle
from tests.utils import ranked

UNIVERSE = "abcdef"
TRUNCATED = RboConfig(depth=3, variant=RboVariant.TRUNCATED)
EXTRAPOLATED = RboConfig(depth=3)


def test_swapped_tail() -> None:
    a, b = ["a", "b", "c"], ["a", "c", "b"]
    assert rbo(a, b, EXTRAPOLATED) == pytest.approx(0.955)
    assert rbo(a, b, TRUNCATED) == pytest.approx(0.226)


@parametrize(n=[10, 25])
def test_identical(n: int) -> None:
    items = [f"d{i}" for i in range(n)]
    assert rbo(items, items, RboConfig()) == pytest.approx(1.0)


def test_disjoint() -> None:
    a = [f"a{i}" for i in range(10)]
    b = [f"b{i}" for i in range(10)]
    assert rbo(a, b, RboConfig()) == 0.0
    assert rbo(a, b, RboConfig(variant="truncated")) == 0.0


def test_empty_lists() -> None:
    assert rbo([], [], RboConfig()) == 1.0
    assert rbo([], ["a"], RboConfig()) == 0.0
    assert rbo(["a"], [], RboConfig()) == 0.0


def test_depth_limited_by_shorter_list() -> None:
    # D = 1: full agreement at the first rank.
    assert rbo(["a"], ["a", "b", "c"], RboConfig()) == pytest.approx(1.0)
    truncated = RboConfig(variant=RboVariant.TRUNCATED)
    assert rbo(["a"], ["a", "b", "c"], truncated) == pytest.approx(0.1)
    # Items past the shorter list are ignored.
    assert rbo(["b"], ["a", "b"], RboConfig()) == 0.0


def test_duplicates() -> None:
    with pytest.raises(InvalidInputError, match="'a' repeated in first list"):
        rbo(["a", "b", "a"], ["a"], RboConfig())
    with pytest.raises(InvalidInputError, match="second list"):
        rbo(["a"], ["b", "b"], RboConfig())


@parametrize(
    "data",
    [{"p": 0.0}, {"p": 1.0}, {"depth": 0}, {"variant": "infinite"}],
)
def test_invalid_config(data: dict) -> None:
    with pytest.raises(ValidationError):
        RboConfig(**data)


def test_variant_case_insensitive() -> None:
    assert RboConfig(variant="TRUNCATED").variant == RboVariant.TRUNCATED


def all_lists(max_len: int) -> list[list[str]]:
    return [
        list(p) for n in range(max_len + 1) for p in permutations(UNIVERSE, n)
    ]


@pytest.mark.slow
@parametrize(variant=list(RboVariant))
def test_exhaustive_short_lists(variant: RboVariant) -> None:
    cfg = RboConfig(depth=3, variant=variant)
    extrapolated = variant == RboVariant.EXTRAPOLATED
    lists = all_lists(3)
    for a in lists:
        for b in lists:
            expected = oracle.rbo(a, b, cfg.p, cfg.depth, extrapolated)
            assert rbo(a, b, cfg) == pytest.approx(expected, abs=1e-12)


@pytest.mark.slow
def test_random_lists_properties() -> None:
    rng = Random(7)
    for _ in range(5000):
        a = rng.sample(UNIVERSE, rng.randint(0, 5))
        b = rng.sample(UNIVERSE, rng.randint(0, 5))
        p = rng.choice([0.5, 0.9, 0.98])
        depth = rng.randint(1, 6)
        truncated = RboConfig(p=p, depth=depth, variant=RboVariant.TRUNCATED)
        extrapolated = RboConfig(p=p, depth=depth)

        value = rbo(a, b, extrapolated)
        assert value == pytest.approx(oracle.rbo(a, b, p, depth, True), abs=1e-12)
        assert rbo(b, a, extrapolated) == pytest.approx(value, abs=1e-12)
        assert 0 <= value <= 1
        assert rbo(a, b, truncated) <= value + 1e-12
        rename = {x: f"doc-{x}" for x in UNIVERSE}
        renamed = rbo([rename[x] for x in a], [rename[x] for x in b], extrapolated)
        assert renamed == pytest.approx(value, abs=1e-12)


def test_crbo_identical() -> None:
    run = {"q1": ranked("q1", "a", "b"), "q2": ranked("q2", "c")}
    report = crbo(run, run, RboConfig())
    assert report.mean == pytest.approx(1.0)
    assert list(report.per_query) == ["q1", "q2"]
    assert report.missing_queries == []


def test_crbo_disjoint() -> None:
    original = {"q1": ranked("q1", "a", "b"), "q2": ranked("q2", "c")}
    counterfactual = {"q1": ranked("q1", "x", "y"), "q2": ranked("q2", "z")}
    assert crbo(original, counterfactual, RboConfig()).mean == 0.0


def test_crbo_mean() -> None:
    original = {"q1": ranked("q1", "a", "b", "c"), "q2": ranked("q2", "a", "b", "c")}
    counterfactual = {
        "q1": ranked("q1", "a", "b", "c"),
        "q2": ranked("q2", "a", "c", "b"),
    }
    report = crbo(original, counterfactual, EXTRAPOLATED)
    assert report.per_query["q2"] == pytest.approx(0.955)
    assert report.mean == pytest.approx(0.9775)


def test_crbo_missing_queries(caplog: pytest.LogCaptureFixture) -> None:
    original = {"q1": ranked("q1", "a"), "q2": ranked("q2", "b")}
    counterfactual = {"q2": ranked("q2", "b"), "q3": ranked("q3", "c")}
    with caplog.at_level(logging.WARNING):
        report = crbo(original, counterfactual, RboConfig())
    assert list(report.per_query) == ["q2"]
    assert report.missing_queries == ["q1", "q3"]
    assert "only in one of the runs" in caplog.text


def test_crbo_no_common_query() -> None:
    with pytest.raises(InvalidInputError, match="share no query"):
        crbo({"q1": ranked("q1", "a")}, {"q2": ranked("q2", "a")}, RboConfig())
