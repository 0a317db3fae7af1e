"""Elimination, decomposition, extremal ranks, the equation solver and the oracle."""
