import math

import pytest
from pydantic import ValidationError
from pytest_cases import case, parametrize, parametrize_with_cases

from rank_bias.metrics.enum import Distance
from rank_bias.metrics.schemas import FairnessConfig, QueryFairness


class CaseInvalidConfig:
    @case(tags=["target"])
    def case_single_group(self) -> tuple[dict, str]:
        return {"target": {"female": 1.0}}, "at least two groups"

    @case(tags=["target"])
    def case_not_summing(self) -> tuple[dict, str]:
        return {"target": {"female": 0.5, "male": 0.2}}, "sum to 1"

    @case(tags=["target"])
    def case_out_of_range(self) -> tuple[dict, str]:
        return {"target": {"female": 1.5, "male": -0.5}}, "must be in"

    @case(tags=["params"])
    @parametrize(k=[0, -3])
    def case_k(self, k: int) -> tuple[dict, str]:
        return {"k": k, "target": {"a": 0.5, "b": 0.5}}, "greater than or equal"

    @case(tags=["params"])
    def case_tau(self) -> tuple[dict, str]:
        return {"tau": -1, "target": {"a": 0.5, "b": 0.5}}, "greater than or equal"

    @case(tags=["params"])
    def case_log_base(self) -> tuple[dict, str]:
        return {"log_base": 1, "target": {"a": 0.5, "b": 0.5}}, "greater than"


@parametrize_with_cases("data, msg", cases=CaseInvalidConfig)
def test_invalid_config(data: dict, msg: str) -> None:
    with pytest.raises(ValidationError, match=msg):
        FairnessConfig(**data)


def test_defaults(cfg: FairnessConfig) -> None:
    assert cfg.k == 10
    assert cfg.tau == 0
    assert cfg.log_base == 2.0
    assert cfg.group_ids == ["female", "male"]
    assert cfg.target_vector().tolist() == [0.5, 0.5]


def test_group_order_follows_target() -> None:
    cfg = FairnessConfig(target={"male": 0.3, "female": 0.7})
    assert cfg.group_ids == ["male", "female"]
    assert cfg.target_vector().tolist() == [0.3, 0.7]


@parametrize(log_base=[2.0, math.e, 10.0])
def test_position_bias(log_base: float) -> None:
    cfg = FairnessConfig(target={"a": 0.5, "b": 0.5}, log_base=log_base)
    bias = cfg.position_bias(4)
    assert bias[0] == pytest.approx(math.log(log_base) / math.log(2))
    assert bias[3] == pytest.approx(math.log(log_base) / math.log(5))
    assert (bias[:-1] > bias[1:]).all()
    assert len(cfg.position_bias(0)) == 0


def test_with_k(cfg: FairnessConfig) -> None:
    other = cfg.with_k(3)
    assert other.k == 3
    assert other.target == cfg.target
    assert cfg.k == 10


def test_config_is_frozen(cfg: FairnessConfig) -> None:
    with pytest.raises(TypeError):
        cfg.k = 5


def test_excluded_query() -> None:
    result = QueryFairness.excluded_query("q1")
    assert result.excluded
    assert result.undefined_representation
    assert all(
        getattr(result, name) is None
        for name in ("fairr", "nfairr", "texfair", "texfair_no_rbdf", "awrf_doc")
    )


@parametrize(value=["TOTAL_VARIATION", "total-variation", "L1", "Jensen_Shannon"])
def test_distance_case_insensitive(value: str) -> None:
    assert isinstance(Distance(value), Distance)
