"""Counterfactual data substitution of group terms and names."""
import logging
import os
import re
from collections import Counter
from collections.abc import Mapping
from functools import partial
from pathlib import Path
from typing import Dict, Optional

from tqdm import tqdm

from rank_bias.corpus.crud import read_collection
from rank_bias.corpus.tokenizer import iter_token_spans
from rank_bias.counterfactual.constants import CLAUSE_BREAK, PRONOUN_FOLLOWERS
from rank_bias.counterfactual.schemas import TransformReport
from rank_bias.crud import open_text
from rank_bias.exceptions import ArtifactIOError
from rank_bias.lexicon.enum import PosTag
from rank_bias.lexicon.schemas import CdsMapping
from rank_bias.pool import chunked, ordered_map

LOG = logging.getLogger(__name__)

PosAnnotations = Mapping[int, PosTag]


def match_case(source: str, replacement: str) -> str:
    """Copy the casing pattern of the source token on the replacement."""
    if len(source) > 1 and source.isupper():
        return replacement.upper()
    if source[:1].isupper():
        return replacement[:1].upper() + replacement[1:]
    return replacement


def guess_pos(text: str, tokens: list[re.Match], i: int) -> PosTag:
    """Default part of speech of an ambiguous pronoun.

    Possessive when the next token is in the same clause, is not a function
    word and is followed by more text. Personal pronoun otherwise.
    """
    if i + 1 >= len(tokens):
        return PosTag.PRON
    nxt = tokens[i + 1]
    if any(c in CLAUSE_BREAK for c in text[tokens[i].end() : nxt.start()]):
        return PosTag.PRON
    if nxt.group().lower() in PRONOUN_FOLLOWERS:
        return PosTag.PRON
    if not text[nxt.end() :].strip():
        return PosTag.PRON
    return PosTag.POSS


def rewrite(
    text: str, mapping: CdsMapping, pos_annotations: Optional[PosAnnotations] = None
) -> tuple[str, Counter]:
    """Substitute mapped tokens keeping everything else untouched.

    Args:
    ----
        text (str): Raw text.
        mapping (CdsMapping): Substitutions.
        pos_annotations (Mapping | None): Token position to tag. Positions
            follow the tokenizer. Unannotated ambiguous tokens use the default
            heuristic.

    Returns:
    -------
        tuple[str, Counter]. The new text and the count of each
        'source->counterpart' substitution.
    """
    tokens = list(iter_token_spans(text))
    counts: Counter = Counter()
    parts: list[str] = []
    last = 0
    for i, match in enumerate(tokens):
        token = match.group().lower()
        tag = None
        if token in mapping.pos_pairs:
            tag = (pos_annotations or {}).get(i) or guess_pos(text, tokens, i)
        counterpart = mapping.counterpart(token, tag)
        if counterpart is None:
            continue
        parts.append(text[last : match.start()])
        parts.append(match_case(match.group(), counterpart))
        last = match.end()
        counts[f"{token}->{counterpart}"] += 1
    if not counts:
        return text, counts
    parts.append(text[last:])
    return "".join(parts), counts


def cds_transform(
    text: str, mapping: CdsMapping, pos_annotations: Optional[PosAnnotations] = None
) -> str:
    """Replace every mapped token with its counterpart.

    Matching is case-insensitive; initial capital and all-caps tokens keep
    their pattern.
    """
    return rewrite(text, mapping, pos_annotations)[0]


def _rewrite_chunk(
    task: tuple[list[tuple[int, str, str]], Dict[str, Dict[int, PosTag]]],
    mapping: CdsMapping,
) -> list[tuple[str, str, Counter]]:
    chunk, annotations = task
    out = []
    for _, doc_id, text in chunk:
        new_text, counts = rewrite(text, mapping, annotations.get(doc_id))
        out.append((doc_id, new_text, counts))
    return out


def cds_collection(
    collection_path: Path,
    mapping: CdsMapping,
    out_path: Path,
    *,
    pos_annotations: Optional[Mapping[str, PosAnnotations]] = None,
    workers: int = 1,
    chunk_size: int = 10000,
    progress: Optional[bool] = None,
) -> TransformReport:
    """Write the counterfactual version of a collection.

    Documents keep their ids and order. Documents without substitutions are
    written unchanged.

    Args:
    ----
        collection_path (Path): Collection TSV.
        mapping (CdsMapping): Substitutions.
        out_path (Path): Counterfactual collection TSV.
        pos_annotations (Mapping | None): Document id to token tags.
        workers (int): Worker processes.
        chunk_size (int): Documents per worker task.
        progress (bool | None): Show a progress bar. By default it is shown
            when INFO messages are enabled.

    Returns:
    -------
        TransformReport.
    """
    if progress is None:
        progress = LOG.isEnabledFor(logging.INFO)
    annotations = pos_annotations or {}
    tasks = (
        (chunk, {d: annotations[d] for _, d, _ in chunk if d in annotations})
        for chunk in chunked(read_collection(collection_path), chunk_size)
    )
    totals: Counter = Counter()
    documents = changed = 0
    out_path = Path(out_path)
    tmp = out_path.with_name(f".tmp-{out_path.name}")
    try:
        out_path.parent.mkdir(parents=True, exist_ok=True)
    except OSError as e:
        raise ArtifactIOError(f"Cannot create '{out_path.parent}': {e}") from e
    with open_text(tmp, "w") as f, tqdm(
        desc="Rewriting", unit="doc", disable=not progress
    ) as bar:
        task = partial(_rewrite_chunk, mapping=mapping)
        for results in ordered_map(task, tasks, workers=workers):
            for doc_id, text, counts in results:
                f.write(f"{doc_id}\t{text}\n")
                documents += 1
                changed += bool(counts)
                totals.update(counts)
            bar.update(len(results))
    try:
        os.replace(tmp, out_path)
    except OSError as e:
        raise ArtifactIOError(f"Cannot write '{out_path}': {e}") from e
    LOG.info("Rewrote %d documents, %d changed", documents, changed)
    return TransformReport(
        documents=documents, changed=changed, substitutions=dict(sorted(totals.items()))
    )
