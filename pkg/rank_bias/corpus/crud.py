"""Module with Read and Write operations for collections and corpus indexes.

Index file layout (UTF-8 text, optionally gzip compressed by extension):

    line 1      JSON header: format_version, tokenizer_id, lexicon_fingerprint,
                groups (column order), documents (record count)
    lines 2..n  one record per document, sorted by doc_id:
                doc_id<TAB>length<TAB>m_1<TAB>...<TAB>m_N
    last line   #sha256<TAB><hex digest of the UTF-8 bytes of all previous lines>
"""
import csv
import gzip
import hashlib
import io
import json
import logging
from collections.abc import Iterator
from pathlib import Path

import numpy as np
import pandas as pd

from rank_bias.corpus.constants import INDEX_CHECKSUM_PREFIX, INDEX_FORMAT_VERSION
from rank_bias.corpus.index import CorpusIndex
from rank_bias.crud import FileManagerBase, open_text
from rank_bias.exceptions import ArtifactIOError, CollectionError, IndexFormatError

LOG = logging.getLogger(__name__)


def read_collection(path: Path) -> Iterator[tuple[int, str, str]]:
    """Stream a Collection TSV file.

    Args:
    ----
        path (Path): `doc_id<TAB>text` per line, UTF-8, `.gz` accepted.

    Yields:
    ------
        tuple[int, str, str]. Line number, document id and text.

    Raises:
    ------
        CollectionError: Undecodable line, missing tab or empty doc_id. The
            message contains the line number.
    """
    path = Path(path)
    try:
        f = gzip.open(path, "rb") if path.suffix == ".gz" else open(path, "rb")
    except OSError as e:
        raise ArtifactIOError(f"Cannot open collection '{path}': {e}") from e
    with f:
        try:
            for lineno, raw in enumerate(f, start=1):
                yield (lineno, *parse_collection_line(raw, lineno, path))
        except OSError as e:
            raise ArtifactIOError(f"I/O error on '{path}': {e}") from e


def parse_collection_line(raw: bytes, lineno: int, path: Path) -> tuple[str, str]:
    """Decode and split a single collection line."""
    try:
        line = raw.decode("utf-8").rstrip("\r\n")
    except UnicodeDecodeError as e:
        raise CollectionError(f"'{path}' line {lineno}: not valid UTF-8") from e
    doc_id, sep, text = line.partition("\t")
    if not sep or not doc_id.strip():
        raise CollectionError(f"'{path}' line {lineno}: expected doc_id<TAB>text")
    return doc_id.strip(), text


class CorpusIndexManager(FileManagerBase[CorpusIndex]):
    """Corpus index read and write operations."""

    def dumps(self, obj: CorpusIndex) -> str:
        """Serialize the index with header and checksum trailer."""
        header = {
            "format_version": INDEX_FORMAT_VERSION,
            "tokenizer_id": obj.tokenizer_id,
            "lexicon_fingerprint": obj.lexicon_fingerprint,
            "groups": obj.group_ids,
            "documents": len(obj),
        }
        buf = io.StringIO()
        buf.write(json.dumps(header, ensure_ascii=False, separators=(",", ":")))
        buf.write("\n")
        for doc_id, length, mags in zip(obj.doc_ids, obj.lengths, obj.magnitudes):
            buf.write("\t".join([doc_id, str(length), *map(str, mags)]))
            buf.write("\n")
        body = buf.getvalue()
        digest = hashlib.sha256(body.encode("utf-8")).hexdigest()
        return f"{body}{INDEX_CHECKSUM_PREFIX}{digest}\n"

    def read(self, path: Path) -> CorpusIndex:
        """Load an index verifying checksum and format version.

        Raises:
        ------
            IndexFormatError: Missing or wrong checksum (corrupt or truncated
                file), unknown format version, inconsistent records.
        """
        with open_text(path) as f:
            text = f.read()
        cut = text.rfind(INDEX_CHECKSUM_PREFIX)
        if cut < 0 or (cut > 0 and text[cut - 1] != "\n"):
            raise IndexFormatError(f"Index '{path}': checksum trailer missing")
        body, trailer = text[:cut], text[cut + len(INDEX_CHECKSUM_PREFIX) :].strip()
        if hashlib.sha256(body.encode("utf-8")).hexdigest() != trailer:
            raise IndexFormatError(f"Index '{path}': checksum mismatch")

        first, _, records = body.partition("\n")
        try:
            header = json.loads(first)
        except json.JSONDecodeError as e:
            raise IndexFormatError(f"Index '{path}': malformed header") from e
        version = header.get("format_version")
        if version != INDEX_FORMAT_VERSION:
            raise IndexFormatError(
                f"Index '{path}': format version {version}, "
                f"expected {INDEX_FORMAT_VERSION}"
            )
        groups = list(header["groups"])
        table = self._read_records(records, len(groups), path)
        if len(table) != header.get("documents"):
            raise IndexFormatError(f"Index '{path}': document count mismatch")
        return CorpusIndex(
            doc_ids=table[0].tolist(),
            lengths=table[1].to_numpy(dtype=np.int64),
            magnitudes=table.iloc[:, 2:].to_numpy(dtype=np.int64),
            group_ids=groups,
            lexicon_fingerprint=header["lexicon_fingerprint"],
            tokenizer_id=header["tokenizer_id"],
        )

    def _read_records(self, records: str, n_groups: int, path: Path) -> pd.DataFrame:
        columns = 2 + n_groups
        if not records:
            return pd.DataFrame(
                {
                    i: pd.Series(dtype=object if i == 0 else np.int64)
                    for i in range(columns)
                }
            )
        try:
            return pd.read_csv(
                io.StringIO(records),
                sep="\t",
                header=None,
                names=list(range(columns)),
                dtype={0: str, **{i: np.int64 for i in range(1, columns)}},
                quoting=csv.QUOTE_NONE,
                keep_default_na=False,
                na_filter=False,
            )
        except (ValueError, pd.errors.ParserError) as e:
            raise IndexFormatError(f"Index '{path}': malformed records: {e}") from e


index_mng = CorpusIndexManager()


def save_index(index: CorpusIndex, path: Path) -> Path:
    """Persist the index."""
    path = index_mng.write(index, Path(path))
    LOG.info("Saved index with %d documents to %s", len(index), path)
    return path


def load_index(path: Path) -> CorpusIndex:
    """Load a persisted index, verifying version and checksum."""
    index = index_mng.read(Path(path))
    LOG.info("Loaded index with %d documents from %s", len(index), path)
    return index
