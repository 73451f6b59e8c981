"""Quandle homology, cocycle invariants and link diagram colourings."""

__version__ = "0.1.0"
