"""Weighted Stirling-type triangles over exact polynomial arithmetic."""

__version__ = "0.1.0"
