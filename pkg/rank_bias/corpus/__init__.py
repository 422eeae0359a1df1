"""Document collection tokenization and per-document statistics index."""
