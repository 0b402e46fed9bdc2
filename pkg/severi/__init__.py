"""Exact Severi degrees of rational curves on P2, P1xP1 and Hirzebruch surfaces."""

__version__ = "1.0.0"
