"""Definition of Analysis constants."""

DOC_RUN_TAG = "Run name, the run file name without the run file extensions."
DOC_CONFIG = "Effective settings used to compute the report."
DOC_PER_QUERY = "Measures of every evaluated query, in query id order."
DOC_AGGREGATES = "Mean of each measure over the queries where it is defined."
DOC_INCLUDED = "Number of queries contributing to each mean."
DOC_EXCLUDED = "Number of queries excluded from every mean."
DOC_MRR = "Reciprocal rank of the first relevant document in the top-k."
DOC_NDCG = "Normalized discounted cumulative gain at k."

FAIRNESS_METRICS = ("nfairr", "texfair", "texfair_no_rbdf", "awrf_doc")
EFFECTIVENESS_METRICS = ("mrr", "ndcg")
COMPARED_METRICS = FAIRNESS_METRICS + EFFECTIVENESS_METRICS
PER_QUERY_COLUMNS = (
    "fairr",
    "nfairr",
    "texfair",
    "texfair_no_rbdf",
    "ted",
    "rbdf",
    "awrf_doc",
    "mrr",
    "ndcg",
)
CORRELATED_PAIRS = (("texfair", "nfairr"), ("texfair_no_rbdf", "nfairr"))
MIN_CORRELATION_PAIRS = 3
MIN_TTEST_PAIRS = 2
SWEEP_COLUMNS = ("k", *FAIRNESS_METRICS, "included")
PER_QUERY_FILE = "per_query.csv"
SWEEP_FILE = "sweep.csv"
SWEEP_CONFIG_FILE = "sweep.json"
STATS_FILE = "stats.json"
RUN_SUFFIXES = (".run", ".trec", ".txt", ".tsv")
