"""Exact constructions and certificates for the Leech lattice kissing chain."""

__version__ = "0.1.0"
