"""Module with Read and Write operations for group lexicons and CDS mappings."""
import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import ValidationError

from rank_bias.crud import FileManagerBase, open_text
from rank_bias.exceptions import CdsMappingError, LexiconError
from rank_bias.lexicon.constants import NAME_TAG
from rank_bias.lexicon.enum import PosTag
from rank_bias.lexicon.schemas import CdsMapping, GroupLexicon, LexiconGroup

LOG = logging.getLogger(__name__)


class LexiconManager(FileManagerBase[GroupLexicon]):
    """Group lexicon read and write operations on the Lexicon JSON format."""

    def read(
        self, path: Path, target: Optional[Dict[str, float]] = None
    ) -> GroupLexicon:
        """Load and validate a lexicon.

        Terms are lowercased. An explicit target overrides the one in the file;
        when none is given the target is uniform.

        Args:
        ----
            path (Path): Lexicon JSON file.
            target (dict | None): Optional target distribution.

        Returns:
        -------
            GroupLexicon.
        """
        with open_text(path) as f:
            text = f.read()
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise LexiconError(
                f"Malformed lexicon '{path}' at line {e.lineno}: {e.msg}"
            ) from e
        if not isinstance(data, dict) or not isinstance(data.get("groups"), dict):
            raise LexiconError(f"Lexicon '{path}' must contain a 'groups' object")
        return self.parse_obj(data, target=target, source=str(path))

    def parse_obj(
        self,
        data: Dict[str, Any],
        *,
        target: Optional[Dict[str, float]] = None,
        source: str = "<memory>",
    ) -> GroupLexicon:
        """Validate a Lexicon JSON object."""
        try:
            groups = [
                LexiconGroup(group_id=group_id, terms={str(t).lower() for t in terms})
                for group_id, terms in data["groups"].items()
            ]
            return GroupLexicon(
                groups=groups, target=target or data.get("target") or {}
            )
        except ValidationError as e:
            raise LexiconError(f"Invalid lexicon '{source}': {e}") from e

    def dumps(self, obj: GroupLexicon) -> str:
        """Serialize to the Lexicon JSON format."""
        return json.dumps(obj.to_json_dict(), indent=2, ensure_ascii=False) + "\n"


class CdsMappingManager(FileManagerBase[CdsMapping]):
    """CDS mapping read and write operations on the CDS TSV format."""

    comment_prefix = "#"

    def read(self, path: Path) -> CdsMapping:
        """Load and validate a CDS mapping.

        Each line is a directed entry `term<TAB>counterpart<TAB>[tag]` where the
        optional tag is POSS or PRON for part-of-speech dependent entries, NAME
        for name pairs.

        Args:
        ----
            path (Path): CDS TSV file.

        Returns:
        -------
            CdsMapping.
        """
        term_pairs: Dict[str, str] = {}
        name_pairs: Dict[str, str] = {}
        pos_pairs: Dict[str, Dict[PosTag, str]] = {}
        for lineno, line in self.iter_lines(path):
            cols = [c.strip() for c in line.split("\t")]
            if len(cols) not in (2, 3) or not cols[0] or not cols[1]:
                raise CdsMappingError(
                    f"'{path}' line {lineno}: expected term<TAB>counterpart[<TAB>tag]"
                )
            src, dst = cols[0].lower(), cols[1].lower()
            tag = cols[2].upper() if len(cols) == 3 and cols[2] else None
            if tag == NAME_TAG:
                target = name_pairs
            elif tag is not None:
                try:
                    pos = PosTag(tag)
                except ValueError as e:
                    raise CdsMappingError(
                        f"'{path}' line {lineno}: unknown tag '{cols[2]}'"
                    ) from e
                by_tag = pos_pairs.setdefault(src, {})
                if pos in by_tag:
                    raise CdsMappingError(
                        f"'{path}' line {lineno}: duplicate key '{src}' ({pos.value})"
                    )
                by_tag[pos] = dst
                continue
            else:
                target = term_pairs
            if src in target:
                raise CdsMappingError(f"'{path}' line {lineno}: duplicate key '{src}'")
            target[src] = dst
        try:
            return CdsMapping(
                term_pairs=term_pairs, name_pairs=name_pairs, pos_pairs=pos_pairs
            )
        except ValidationError as e:
            raise CdsMappingError(f"Invalid CDS mapping '{path}': {e}") from e

    def dumps(self, obj: CdsMapping) -> str:
        """Serialize to the CDS TSV format."""
        lines = [f"{s}\t{d}" for s, d in sorted(obj.term_pairs.items())]
        for src, by_tag in sorted(obj.pos_pairs.items()):
            lines += [f"{src}\t{d}\t{t.value}" for t, d in sorted(by_tag.items())]
        lines += [f"{s}\t{d}\t{NAME_TAG}" for s, d in sorted(obj.name_pairs.items())]
        return "\n".join(lines) + "\n"


lexicon_mng = LexiconManager()
cds_mapping_mng = CdsMappingManager()


def load_lexicon(path: Path, target: Optional[Dict[str, float]] = None) -> GroupLexicon:
    """Load a validated group lexicon; uniform target when none is given."""
    lexicon = lexicon_mng.read(Path(path), target=target)
    LOG.debug("Loaded lexicon %s with groups %s", path, lexicon.group_ids)
    return lexicon


def save_lexicon(lexicon: GroupLexicon, path: Path) -> Path:
    """Write a lexicon in the Lexicon JSON format."""
    return lexicon_mng.write(lexicon, Path(path))


def load_cds_mapping(path: Path) -> CdsMapping:
    """Load a validated involutory CDS mapping."""
    mapping = cds_mapping_mng.read(Path(path))
    LOG.debug(
        "Loaded CDS mapping %s: %d keys, pos sensitive %s",
        path,
        mapping.size,
        sorted(mapping.pos_sensitive),
    )
    return mapping
