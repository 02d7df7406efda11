"""Exact path objects over simplicial, groupoid, and chain-complex backends."""

__version__ = "0.1.0"
