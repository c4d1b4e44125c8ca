"""Exact computations with axial pseudo-composition algebras and their Miyamoto groups."""

__version__ = "0.1.0"
