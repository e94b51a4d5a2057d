"""Eckardt points, triple lines and elliptic curves on cubic threefolds."""

__version__ = "0.1.0"
