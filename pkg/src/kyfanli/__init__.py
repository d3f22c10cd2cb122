"""Ky Fan k-norms of the LI-matrix of graphs."""

__version__ = "0.1.0"
