"""Exact certification of integral structures in the three division
composition algebras of dimension eight and their E8-related lattices."""

__version__ = "0.1.0"
