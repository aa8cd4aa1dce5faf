"""Exact verification toolkit for the special Racah algebra and the sl2 diagonal centralizer."""

__version__ = "0.1.0"
