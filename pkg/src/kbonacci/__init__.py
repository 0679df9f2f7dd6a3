"""Exact k-th order Fibonacci and Lucas sequences, polynomials and identities."""
from .sequences import Family, SequenceSpec, evaluate, gok_fib, gok_lucas, kso_fib, kso_lucas, sequence_table

__all__ = ["Family", "SequenceSpec", "evaluate", "gok_fib", "gok_lucas", "kso_fib",
           "kso_lucas", "sequence_table"]
