"""Tokenizer shared by indexing and counterfactual rewriting."""
import re
from collections.abc import Iterator

TOKENIZER_ID = "lower-alnum-v1"
TOKEN_PATTERN = re.compile(r"[^\W_]+")


def tokenize(text: str) -> list[str]:
    """Split on any non alphanumeric character and lowercase the tokens.

    Args:
    ----
        text (str): Raw text.

    Returns:
    -------
        list[str]. Tokens in order of appearance, empty tokens dropped.
    """
    return [m.lower() for m in TOKEN_PATTERN.findall(text)]


def iter_token_spans(text: str) -> Iterator[re.Match]:
    """Yield the match of every token, with its position in the raw text."""
    return TOKEN_PATTERN.finditer(text)
