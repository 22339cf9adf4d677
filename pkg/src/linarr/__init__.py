"""Exact line arrangements: incidence, Chern slopes, H-constants."""

__version__ = "0.1.0"
