"""Scalar one-loop box integrals: closed forms, Mellin-Barnes and residue sums."""

from ._core import InputError, NumericalError, evaluate, laurent, verify

__all__ = ["InputError", "NumericalError", "evaluate", "laurent", "verify"]
