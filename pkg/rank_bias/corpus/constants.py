"""Definition of Corpus constants."""

DOC_DOC_ID = "Document unique ID in the collection."
DOC_LENGTH = "Number of tokens of the document."
DOC_MAGNITUDES = "Group id to total frequency of the group representative terms."

INDEX_FORMAT_VERSION = 1
INDEX_CHECKSUM_PREFIX = "#sha256\t"
