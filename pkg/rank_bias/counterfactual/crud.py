"""Module with Read and Write operations for POS annotations and CDS/CRBO reports."""
import json
import logging
from pathlib import Path
from typing import Dict

import pandas as pd

from rank_bias.counterfactual.schemas import CrboReport, TransformReport
from rank_bias.crud import FileManagerBase, write_text
from rank_bias.exceptions import InvalidInputError
from rank_bias.lexicon.enum import PosTag

LOG = logging.getLogger(__name__)

Annotations = Dict[str, Dict[int, PosTag]]


class PosAnnotationManager(FileManagerBase[Annotations]):
    """Token level part of speech annotations.

    One line per annotated token: `doc_id<TAB>token_index<TAB>tag`, token
    indexes are 0-based positions in the tokenized document.
    """

    comment_prefix = "#"

    def read(self, path: Path) -> Annotations:
        """Parse the annotation file."""
        annotations: Annotations = {}
        for lineno, line in self.iter_lines(path):
            cols = line.split("\t")
            if len(cols) != 3:
                raise InvalidInputError(
                    f"'{path}' line {lineno}: expected doc_id<TAB>token_index<TAB>tag"
                )
            doc_id, position, tag = (c.strip() for c in cols)
            try:
                index = int(position)
                pos = PosTag(tag)
            except ValueError as e:
                raise InvalidInputError(
                    f"'{path}' line {lineno}: invalid token index or tag"
                ) from e
            if index < 0:
                raise InvalidInputError(f"'{path}' line {lineno}: negative token index")
            annotations.setdefault(doc_id, {})[index] = pos
        return annotations

    def dumps(self, obj: Annotations) -> str:
        """Serialize annotations sorted by document and position."""
        return "".join(
            f"{doc_id}\t{index}\t{tag.value}\n"
            for doc_id, tags in sorted(obj.items())
            for index, tag in sorted(tags.items())
        )


pos_annotation_mng = PosAnnotationManager()


def load_pos_annotations(path: Path) -> Annotations:
    """Load token level part of speech annotations."""
    annotations = pos_annotation_mng.read(Path(path))
    LOG.info("Loaded POS annotations of %d documents", len(annotations))
    return annotations


def write_transform_report(report: TransformReport, path: Path) -> Path:
    """Write the substitution counts as a JSON map."""
    text = json.dumps(report.substitutions, indent=2, ensure_ascii=False)
    return write_text(f"{text}\n", Path(path))


def crbo_frame(report: CrboReport) -> pd.DataFrame:
    """Per query RBO table."""
    return pd.DataFrame(
        {"qid": list(report.per_query), "rbo": list(report.per_query.values())}
    )


def write_crbo(report: CrboReport, path: Path) -> Path:
    """Write the per query RBO as CSV."""
    text = crbo_frame(report).to_csv(index=False, lineterminator="\n")
    return write_text(text, Path(path))


def write_crbo_summary(report: CrboReport, path: Path) -> Path:
    """Write mean, missing queries and effective settings as JSON."""
    text = json.dumps(
        report.dict(exclude={"per_query"}), indent=2, sort_keys=True, default=str
    )
    return write_text(f"{text}\n", Path(path))
