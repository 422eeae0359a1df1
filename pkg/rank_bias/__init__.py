"""Measure group representation bias in ranked document lists."""
