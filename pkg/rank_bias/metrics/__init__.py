"""Fairness measures of ranked lists: NFaiRR, AWRF and term exposure based TExFAIR."""
