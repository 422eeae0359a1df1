"""Definition of Fairness metrics constants."""

DOC_K = "Ranking cut-off."
DOC_TAU = "A document with at most tau representative terms is neutral."
DOC_LOG_BASE = "Base of the logarithm of the position bias 1/log(r+1)."
DOC_TARGET = "Target representation of each group. Values sum to 1."

DOC_QUERY_ID = "Query unique ID."
DOC_NFAIRR = "Normalized fairness of retrieval results."
DOC_FAIRR = "Rank discounted sum of document neutrality scores."
DOC_TEXFAIR = "Term exposure based fairness, with rank-biased discounting."
DOC_TEXFAIR_NO_RBDF = "Term exposure based fairness, without rank-biased discounting."
DOC_TED = "Term exposure based divergence, with rank-biased discounting."
DOC_RBDF = "Rank discounted fraction of documents with representative terms."
DOC_AWRF = "Attention weighted rank fairness with term based associations."
DOC_REPRESENTATION = "Share of the term exposure of each group."
DOC_UNDEFINED = "No representative term in the top-k, the representation is undefined."
DOC_EXCLUDED = "The query is excluded from the aggregates."

TARGET_TOLERANCE = 1e-9
NFAIRR_TOLERANCE = 1e-12
