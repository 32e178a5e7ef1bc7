"""Exact character, Burnside-ring and relation computations for cubic surfaces."""

__version__ = "0.1.0"
