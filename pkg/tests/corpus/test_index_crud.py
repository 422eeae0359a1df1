import hashlib
from pathlib import Path

import pytest
from pytest_cases import parametrize

from rank_bias.corpus.builder import build_index_from_texts
from rank_bias.corpus.crud import index_mng, load_index, save_index
from rank_bias.corpus.index import CorpusIndex
from rank_bias.exceptions import ArtifactIOError, FingerprintError, IndexFormatError
from rank_bias.lexicon.schemas import GroupLexicon, LexiconGroup
from rank_bias.metrics.dependencies import valid_index


@parametrize(name=["index.tsv", "index.tsv.gz"])
def test_round_trip(tmp_path: Path, fig1_index: CorpusIndex, name: str) -> None:
    path = save_index(fig1_index, tmp_path / name)
    assert load_index(path) == fig1_index


def test_round_trip_empty(tmp_path: Path, gender_lexicon: GroupLexicon) -> None:
    index = build_index_from_texts({}, gender_lexicon)
    assert load_index(save_index(index, tmp_path / "empty.tsv")) == index


def test_deterministic_bytes(tmp_path: Path, fig1_index: CorpusIndex) -> None:
    a = save_index(fig1_index, tmp_path / "a.tsv").read_bytes()
    b = save_index(fig1_index, tmp_path / "b.tsv").read_bytes()
    assert a == b


def test_truncated_file(tmp_path: Path, fig1_index: CorpusIndex) -> None:
    path = save_index(fig1_index, tmp_path / "index.tsv")
    lines = path.read_text().splitlines(keepends=True)
    path.write_text("".join(lines[:-3]))
    with pytest.raises(IndexFormatError, match="checksum"):
        load_index(path)


def test_corrupted_record(tmp_path: Path, fig1_index: CorpusIndex) -> None:
    path = save_index(fig1_index, tmp_path / "index.tsv")
    path.write_text(path.read_text().replace("d1\t4\t", "d1\t5\t"))
    with pytest.raises(IndexFormatError, match="checksum mismatch"):
        load_index(path)


def test_wrong_version(tmp_path: Path, fig1_index: CorpusIndex) -> None:
    text = index_mng.dumps(fig1_index).replace(
        '"format_version":1', '"format_version":99'
    )
    body = text[: text.rfind("#sha256")]
    path = tmp_path / "index.tsv"
    # Re-signed so that only the version check fails.
    digest = hashlib.sha256(body.encode("utf-8")).hexdigest()
    path.write_text(f"{body}#sha256\t{digest}\n")
    with pytest.raises(IndexFormatError, match="format version 99"):
        load_index(path)


def test_missing_file(tmp_path: Path) -> None:
    with pytest.raises(ArtifactIOError):
        load_index(tmp_path / "missing.tsv")


def test_mismatched_lexicon(fig1_index: CorpusIndex) -> None:
    other = GroupLexicon(
        groups=[
            LexiconGroup(group_id="female", terms={"she"}),
            LexiconGroup(group_id="male", terms={"he"}),
        ]
    )
    with pytest.raises(FingerprintError, match="different lexicon"):
        valid_index(fig1_index, other)


def test_matching_lexicon(
    fig1_index: CorpusIndex, gender_lexicon: GroupLexicon
) -> None:
    valid_index(fig1_index, gender_lexicon)
