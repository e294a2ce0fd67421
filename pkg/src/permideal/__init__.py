"""Groebner bases and primary decomposition of 2x2 permanental ideals."""

__version__ = "0.1.0"
