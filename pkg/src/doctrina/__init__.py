"""Finite-model engine for the two-sided closure calculus of posets and categories."""

__version__ = "0.1.0"
