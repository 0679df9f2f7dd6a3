"""Evaluate any sequence family through a chosen exact backend.

``recurrence`` walks the recurrence, ``matrix`` reads entries of companion
matrix powers, ``partition`` uses the weighted-partition sums.  All three must
agree exactly; the acceptance suite checks that.
"""
from __future__ import annotations

from typing import Callable

from . import matrices, partitions
from .errors import IndexOutOfDomain
from .sequences import Family, SequenceSpec, evaluate, ones

BACKENDS = ("recurrence", "matrix", "partition")


def _power(k: int, c: tuple[int, ...], n: int) -> matrices.ExactMatrix:
    if n >= 0:
        return matrices.mat_power(matrices.companion(k, c), n)
    return matrices.mat_power(matrices.companion_inverse(k, c), -n)


def _matrix_kso(k: int, c: tuple[int, ...], i: int, n: int, lucas: bool) -> int:
    # row 0 of A^n (times L~_0 for Lucas) holds the branch values at index n
    window = _power(k, c, n)
    if lucas:
        window = window @ matrices.l_tilde_0(k)
    return window[0, i - 1]


def matrix_value(spec: SequenceSpec, n: int) -> int:
    k = spec.k
    if spec.family is Family.KSOKF:
        return _matrix_kso(k, spec.coefficients, spec.branch, n, lucas=False)
    if spec.family is Family.KSOKL:
        return _matrix_kso(k, ones(k), spec.branch, n, lucas=True)
    if spec.family is Family.GOKF:
        if n < 1:
            raise IndexOutOfDomain(f"order-k Fibonacci numbers start at n = 1, got {n}")
        return _matrix_kso(k, ones(k), k, n - k + 2, lucas=False)
    return _matrix_kso(k, ones(k), k, n, lucas=True)


def partition_value(spec: SequenceSpec, n: int) -> int:
    k = spec.k
    if spec.family is Family.KSOKF:
        if spec.coefficients != ones(k):
            raise IndexOutOfDomain("partition sums cover all-ones coefficients only")
        return partitions.fib_combinatorial(k, spec.branch, n)
    if spec.family is Family.KSOKL:
        return partitions.lucas_from_weighted_partitions(k, spec.branch, n)
    if spec.family is Family.GOKF:
        if n < 1:
            raise IndexOutOfDomain(f"order-k Fibonacci numbers start at n = 1, got {n}")
        return partitions.multinomial_sum(k, n - k + 1)
    return partitions.lucas_from_weighted_partitions(k, k, n)


_DISPATCH: dict[str, Callable[[SequenceSpec, int], int]] = {
    "recurrence": evaluate,
    "matrix": matrix_value,
    "partition": partition_value,
}


def value(spec: SequenceSpec, n: int, backend: str = "recurrence") -> int:
    try:
        fn = _DISPATCH[backend]
    except KeyError:
        raise ValueError(f"unknown backend {backend!r}; choose from {BACKENDS}") from None
    return fn(spec, n)
