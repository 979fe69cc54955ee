"""Braid-group engine for twisted torus knots."""

__version__ = "0.1.0"
