"""Sampling and report rendering helpers."""
