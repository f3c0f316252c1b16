"""Subgroup, centralizer and normal-centralizer lattices of finite groups."""

__version__ = "0.1.0"
