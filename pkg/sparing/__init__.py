"""Sparing numbers of graphs under weak integer additive set-indexers."""

__version__ = "0.1.0"
