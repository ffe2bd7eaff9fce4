"""Exact-arithmetic strand categories, nil Hecke algebras and gluing checks."""

__version__ = "0.1.0"
