"""Effectiveness measures, statistics and cut-off sweeps over evaluated runs."""
