"""File to set tests configuration parameters and common fixtures."""
import logging
from collections.abc import Iterator
from pathlib import Path

import pytest

from rank_bias.config import DATA_DIR
from rank_bias.corpus.builder import build_index
from rank_bias.corpus.crud import read_collection
from rank_bias.corpus.index import CorpusIndex
from rank_bias.lexicon.crud import load_cds_mapping, load_lexicon
from rank_bias.lexicon.schemas import CdsMapping, GroupLexicon
from rank_bias.metrics.schemas import FairnessConfig
from rank_bias.rankings.crud import Run, parse_qrels, parse_run
from rank_bias.rankings.schemas import Qrels

TEST_DATA = Path(__file__).parent / "data"
FIG1_COLLECTION = TEST_DATA / "fig1_collection.tsv"
FIG1_RUN = TEST_DATA / "fig1.run"
FIG1_QRELS = TEST_DATA / "fig1.qrels"


@pytest.fixture(autouse=True)
def clear_settings_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """Settings read from the environment must not leak into tests."""
    for name in ("WORKERS", "K", "TAU", "LOG_BASE", "LOG_LEVEL", "RBO_P"):
        monkeypatch.delenv(f"RANK_BIAS_{name}", raising=False)


@pytest.fixture(autouse=True)
def reset_logging() -> Iterator[None]:
    """`main` reconfigures the root logger; restore the default level."""
    yield
    logging.getLogger().setLevel(logging.WARNING)


@pytest.fixture(scope="session")
def gender_lexicon() -> GroupLexicon:
    return load_lexicon(DATA_DIR / "gender_lexicon.json")


@pytest.fixture(scope="session")
def gender_mapping() -> CdsMapping:
    return load_cds_mapping(DATA_DIR / "gender_cds.tsv")


@pytest.fixture(scope="session")
def fig1_index(gender_lexicon: GroupLexicon) -> CorpusIndex:
    return build_index(read_collection(FIG1_COLLECTION), gender_lexicon)


@pytest.fixture(scope="session")
def fig1_run() -> Run:
    return parse_run(FIG1_RUN)


@pytest.fixture(scope="session")
def fig1_qrels() -> Qrels:
    return parse_qrels(FIG1_QRELS)


@pytest.fixture
def cfg() -> FairnessConfig:
    return FairnessConfig(target={"female": 0.5, "male": 0.5})
