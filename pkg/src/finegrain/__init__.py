"""Decompositions, compositions, kernels and parameterized solvers for
fine-grained lower-bound transfers, with exact parameter bookkeeping."""

__version__ = "0.1.0"
