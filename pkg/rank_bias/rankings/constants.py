"""Definition of Rankings constants."""

DOC_QUERY_ID = "Query unique ID."
DOC_DOC_IDS = "Retrieved document ids, best first."
DOC_SCORES = "Retrieval scores, not increasing."
DOC_GRADES = "Query id to document id to relevance grade."

DEFAULT_RUN_TAG = "rank-bias"
RUN_COLUMNS = 6
QRELS_COLUMNS = 4
