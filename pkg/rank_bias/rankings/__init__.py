"""TREC run, qrels and query set parsing into validated ranked lists."""
