"""Temporal matching in link streams."""

__version__ = "0.1.0"
