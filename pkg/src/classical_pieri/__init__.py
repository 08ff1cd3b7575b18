"""Exact Pieri rules, Klimyk tensor decompositions and branching checks for the classical groups."""

__version__ = "0.1.0"
