"""Executable companion to the asymptotic approach to Mahler's method."""

__version__ = "0.1.0"
