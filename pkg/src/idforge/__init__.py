"""Exact verification of binomial / double-factorial / rising-factorial polynomial identities."""

__version__ = "0.1.0"
