"""Exact construction and certification of MDS symbol-pair constacyclic codes."""

__version__ = "0.1.0"
