"""Exact algebra of quasi-posets, their Ehrhart polynomials and packed words."""

__version__ = "0.1.0"
