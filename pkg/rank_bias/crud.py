"""Module with common Read and Write operations on artifact files."""
import gzip
import os
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import IO, Generic, Optional, TypeVar

from rank_bias.exceptions import ArtifactIOError

SchemaType = TypeVar("SchemaType")


@contextmanager
def open_text(path: Path, mode: str = "r") -> Iterator[IO[str]]:
    """Open a UTF-8 text file, transparently handling the `.gz` extension.

    OSError are converted into ArtifactIOError.

    Args:
    ----
        path (Path): Target file.
        mode (str): "r" or "w".

    Yields:
    ------
        IO[str]. Text stream.
    """
    path = Path(path)
    try:
        if path.suffix == ".gz":
            f = gzip.open(path, f"{mode}t", encoding="utf-8", newline="")
        else:
            f = open(path, mode, encoding="utf-8", newline="")
    except OSError as e:
        raise ArtifactIOError(f"Cannot open '{path}': {e}") from e
    try:
        with f:
            yield f
    except UnicodeDecodeError as e:
        raise ArtifactIOError(f"'{path}' is not valid UTF-8: {e}") from e
    except OSError as e:
        raise ArtifactIOError(f"I/O error on '{path}': {e}") from e


class FileManagerBase(Generic[SchemaType]):
    """Class with common read and write operations on line based artifact files.

    Subclasses define how a single file is turned into a domain object and back.
    """

    comment_prefix: Optional[str] = None

    def iter_lines(self, path: Path) -> Iterator[tuple[int, str]]:
        """Yield non-empty lines with their 1-based line number.

        Trailing newline characters are stripped. Comment lines are skipped when
        the manager defines a comment prefix.

        Args:
        ----
            path (Path): File to read.

        Yields:
        ------
            tuple[int, str]. Line number and line content.
        """
        with open_text(path) as f:
            for lineno, line in enumerate(f, start=1):
                line = line.rstrip("\r\n")
                if not line.strip():
                    continue
                if self.comment_prefix and line.startswith(self.comment_prefix):
                    continue
                yield lineno, line

    def read(self, path: Path) -> SchemaType:
        """Read and validate the file content.

        Args:
        ----
            path (Path): File to read.

        Returns:
        -------
            SchemaType. The domain object.
        """
        raise NotImplementedError

    def dumps(self, obj: SchemaType) -> str:
        """Serialize the domain object to the file text format."""
        raise NotImplementedError

    def write(self, obj: SchemaType, path: Path) -> Path:
        """Write the domain object to the target path.

        The content is first written to a temporary sibling file which is then
        renamed, so readers never observe a partial file.

        Args:
        ----
            obj (SchemaType): Object to serialize.
            path (Path): Destination.

        Returns:
        -------
            Path. The written path.
        """
        path = Path(path)
        tmp = path.with_name(f".tmp-{path.name}")
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            with open_text(tmp, "w") as f:
                f.write(self.dumps(obj))
            os.replace(tmp, path)
        except OSError as e:
            raise ArtifactIOError(f"Cannot write '{path}': {e}") from e
        return path


def write_text(text: str, path: Path) -> Path:
    """Write a text document (CSV, JSON) to the given path."""
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    except OSError as e:
        raise ArtifactIOError(f"Cannot write '{path}': {e}") from e
    return path
