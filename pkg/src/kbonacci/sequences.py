"""Exact recurrence engines for the four order-k integer sequence families.

All four families obey the same k-term linear recurrence

    x[n] = c[1] x[n-1] + c[2] x[n-2] + ... + c[k] x[n-k]

and differ only in the k starting values ("window").  Every evaluation goes
through :func:`_walk`, which slides a k-value window forwards, or backwards by
solving the recurrence for its lowest term.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import IndexOutOfDomain, InvalidBranch, InvalidOrder, NonInvertibleRecurrence


class Family(enum.Enum):
    KSOKF = "ksokf"  # k branches of order-k Fibonacci (general coefficients)
    KSOKL = "ksokl"  # k branches of order-k Lucas
    GOKF = "gokf"  # single order-k Fibonacci sequence, indexed from 1
    GOKL = "gokl"  # single order-k Lucas sequence


def check_order(k: int) -> None:
    if not isinstance(k, int) or k < 2:
        raise InvalidOrder(f"order k must be an integer >= 2, got {k!r}")


def check_branch(k: int, i: int) -> None:
    if not 1 <= i <= k:
        raise InvalidBranch(f"branch i must satisfy 1 <= i <= {k}, got {i!r}")


def ones(k: int) -> tuple[int, ...]:
    return (1,) * k


def coefficients(k: int, values: Optional[Sequence[int]] = None) -> tuple[int, ...]:
    """Validate a coefficient vector of length k; ``None`` means all ones."""
    check_order(k)
    if values is None:
        return ones(k)
    values = tuple(int(v) for v in values)
    if len(values) != k:
        raise InvalidOrder(f"expected {k} coefficients, got {len(values)}")
    return values


@dataclass(frozen=True)
class SequenceSpec:
    family: Family
    k: int
    branch: int = 1
    coefficients: tuple[int, ...] = field(default=())

    def __post_init__(self):
        check_order(self.k)
        if self.family in (Family.KSOKF, Family.KSOKL):
            check_branch(self.k, self.branch)
        coeffs = coefficients(self.k, self.coefficients or None)
        if self.family is not Family.KSOKF and coeffs != ones(self.k):
            raise ValueError(f"{self.family.value} is defined for all-ones coefficients only")
        object.__setattr__(self, "coefficients", coeffs)

    @property
    def window_start(self) -> int:
        """Lowest index of the defining window of k values."""
        return 1 if self.family is Family.GOKF else 1 - self.k

    def is_extended(self, n: int) -> bool:
        """True when ``n`` lies below the defining window."""
        return n < self.window_start


def _walk(c: tuple[int, ...], start: int, window: Sequence[int], n_lo: int, n_hi: int) -> list[int]:
    """Values at indices ``n_lo..n_hi`` of the sequence with recurrence
    coefficients ``c`` whose values at ``start..start+k-1`` are ``window``."""
    k = len(c)
    vals = list(window)
    lo = start
    while lo > n_lo:
        if c[-1] == 0:
            raise NonInvertibleRecurrence("backward extension needs c_k != 0")
        # x[lo-1] from x[lo+k-1] = sum_j c_j x[lo+k-1-j]
        top = vals[k - 1] - sum(c[j - 1] * vals[k - 1 - j] for j in range(1, k))
        prev, rem = divmod(top, c[-1])
        if rem:
            raise NonInvertibleRecurrence(
                f"backward value at index {lo - 1} is not an integer (c_k = {c[-1]})")
        vals.insert(0, prev)
        lo -= 1
    hi = lo + len(vals) - 1
    while hi < n_hi:
        vals.append(sum(c[j] * vals[-1 - j] for j in range(k)))
        hi += 1
    return vals[n_lo - lo:n_hi - lo + 1]


def fib_window(k: int, i: int) -> list[int]:
    """kSOkF boundary values at indices 1-k..0: 1 where i = 1-n, else 0."""
    return [1 if i == 1 - n else 0 for n in range(1 - k, 1)]


def lucas_boundary(k: int, i: int, n: int) -> int:
    """kSOkL boundary value of branch ``i`` at an index ``1-k <= n <= 0``."""
    d = i - n
    if d < k:
        return -i
    if d == k:
        return -2 * n + i
    return k - i - 1


def lucas_window(k: int, i: int) -> list[int]:
    return [lucas_boundary(k, i, n) for n in range(1 - k, 1)]


def kso_fib(k: int, c: Optional[Sequence[int]], i: int, n: int) -> int:
    """The n-th term of the i-th order-k Fibonacci branch with coefficients ``c``.

    Indices below ``1-k`` are reached by backward extension, which needs
    ``c[-1]`` nonzero (and an exact division at every step).
    """
    c = coefficients(k, c)
    check_branch(k, i)
    return _walk(c, 1 - k, fib_window(k, i), n, n)[0]


def kso_lucas(k: int, i: int, n: int) -> int:
    """The n-th term of the i-th order-k Lucas branch (all-ones coefficients)."""
    check_order(k)
    check_branch(k, i)
    return _walk(ones(k), 1 - k, lucas_window(k, i), n, n)[0]


def gok_fib(k: int, n: int) -> int:
    """Order-k Fibonacci number with f[1..k-2] = 0 and f[k-1] = f[k] = 1."""
    check_order(k)
    if n < 1:
        raise IndexOutOfDomain(f"order-k Fibonacci numbers start at n = 1, got {n}")
    window = [0] * (k - 2) + [1, 1]
    return _walk(ones(k), 1, window, n, n)[0]


def gok_lucas(k: int, n: int, extend: bool = True) -> int:
    """Order-k Lucas number with l[1-k..-1] = -1 and l[0] = k."""
    check_order(k)
    if n < 1 - k and not extend:
        raise IndexOutOfDomain(f"index {n} is below the boundary window and extension is off")
    window = [-1] * (k - 1) + [k]
    return _walk(ones(k), 1 - k, window, n, n)[0]


def _spec_window(spec: SequenceSpec) -> list[int]:
    if spec.family is Family.KSOKF:
        return fib_window(spec.k, spec.branch)
    if spec.family is Family.KSOKL:
        return lucas_window(spec.k, spec.branch)
    if spec.family is Family.GOKF:
        return [0] * (spec.k - 2) + [1, 1]
    return [-1] * (spec.k - 1) + [spec.k]


def sequence_table(spec: SequenceSpec, n_lo: int, n_hi: int) -> list[tuple[int, int]]:
    """``(n, value)`` for ``n_lo <= n <= n_hi`` from one pass over the recurrence."""
    if n_lo > n_hi:
        raise ValueError(f"empty range {n_lo}..{n_hi}")
    if spec.family is Family.GOKF and n_lo < 1:
        raise IndexOutOfDomain(f"order-k Fibonacci numbers start at n = 1, got {n_lo}")
    values = _walk(spec.coefficients, spec.window_start, _spec_window(spec), n_lo, n_hi)
    return list(zip(range(n_lo, n_hi + 1), values))


def evaluate(spec: SequenceSpec, n: int) -> int:
    """Pointwise value for any :class:`SequenceSpec`."""
    if spec.family is Family.KSOKF:
        return kso_fib(spec.k, spec.coefficients, spec.branch, n)
    if spec.family is Family.KSOKL:
        return kso_lucas(spec.k, spec.branch, n)
    if spec.family is Family.GOKF:
        return gok_fib(spec.k, n)
    return gok_lucas(spec.k, n)
