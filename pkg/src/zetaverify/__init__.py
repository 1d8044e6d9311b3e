"""Numerical and exact verification of zeta-value series identities."""

__version__ = "0.1.0"
