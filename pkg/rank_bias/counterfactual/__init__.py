"""Counterfactual collection rewriting and rank-biased overlap of rankings."""
