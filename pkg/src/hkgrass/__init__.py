"""Exact computations for trivector fourfolds in G(6,10)."""

__version__ = "0.1.0"
