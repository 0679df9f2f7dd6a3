"""Weighted partitions and the partition-sum forms of the integer sequences.

A weighted partition of ``n`` with parts at most ``k`` is an exponent vector
``a = (a_1, ..., a_k)`` of nonnegative integers with ``sum j*a_j = n``; its size
is ``|a| = sum a_j``.  Three sums over such vectors carry everything here:

* ``sum multinomial(a)``                 -- Fibonacci value ``F_{k,n}(1)``
* ``sum n/|a| * multinomial(a)``         -- Lucas value ``G_{k,n}(1)``
* ``sum m_k/|m| * multinomial(m)``       -- a shifted Fibonacci value

Rational weights are accumulated as :class:`~fractions.Fraction` and checked
for integrality before being returned.

The Lucas forms compose "branch i from the last branch" (``l^i_n`` as a sum of
``l^k`` terms) with a partition form of the last branch.  For small ``n`` that
composition needs ``l^k`` at indices ``<= 0``, where no partition sum applies;
by default those terms take the boundary values (``k`` at 0, ``-1`` below).
Passing ``literal=True`` instead evaluates the printed sums verbatim (empty
sums are zero), which disagrees with the sequences whenever ``n < i``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import IndexOutOfDomain, NonIntegralSum
from .sequences import check_branch, check_order


@dataclass(frozen=True)
class WeightedPartition:
    parts: tuple[int, ...]

    @property
    def weight(self) -> int:
        return sum(j * a for j, a in enumerate(self.parts, start=1))

    @property
    def size(self) -> int:
        return sum(self.parts)


def enumerate_partitions(n: int, k: int) -> list[WeightedPartition]:
    """Every ``a`` with ``sum j*a_j = n``, ``0 <= a_j``, in ascending lex order of ``a``."""
    if k < 1:
        raise IndexOutOfDomain(f"largest part must be >= 1, got {k}")
    if n < 0:
        return []
    out: list[tuple[int, ...]] = []

    def descend(j: int, remaining: int, tail: tuple[int, ...]) -> None:
        # choose a_j for j = k, k-1, ..., 2; a_1 absorbs whatever is left
        if j == 1:
            out.append((remaining,) + tail)
            return
        for a in range(remaining // j + 1):
            descend(j - 1, remaining - j * a, (a,) + tail)

    descend(k, n, ())
    out.sort()
    return [WeightedPartition(p) for p in out]


def multinomial(a: WeightedPartition) -> int:
    """``|a|! / (a_1! ... a_k!)``."""
    result = factorial(a.size)
    for part in a.parts:
        result //= factorial(part)
    return result


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise NonIntegralSum(f"{what} evaluated to non-integer {value}")
    return value.numerator


@lru_cache(maxsize=None)
def multinomial_sum(k: int, w: int) -> int:
    """``sum_{a |- w} multinomial(a)``; zero for negative ``w``."""
    return sum(multinomial(a) for a in enumerate_partitions(w, k))


@lru_cache(maxsize=None)
def lucas_weighted_sum(k: int, w: int) -> int:
    """``sum_{a |- w} w/|a| * multinomial(a)`` for ``w >= 1``; zero for ``w < 0``."""
    if w < 0:
        return 0
    if w == 0:
        raise IndexOutOfDomain("the w/|a| weight is undefined for the empty partition")
    total = sum(Fraction(w, a.size) * multinomial(a) for a in enumerate_partitions(w, k))
    return _integral(total, f"lucas weighted sum (k={k}, w={w})")


@lru_cache(maxsize=None)
def tail_weighted_sum(k: int, w: int) -> int:
    """``sum_{m |- w} m_k/|m| * multinomial(m)`` for ``w >= 1``; zero for ``w < 0``."""
    if w < 0:
        return 0
    if w == 0:
        raise IndexOutOfDomain("the m_k/|m| weight is undefined for the empty partition")
    total = sum(Fraction(m.parts[-1], m.size) * multinomial(m) for m in enumerate_partitions(w, k))
    return _integral(total, f"tail weighted sum (k={k}, w={w})")


def _lucas_k_boundary(k: int, w: int) -> int:
    # last Lucas branch on its boundary window 1-k..0
    return k if w == 0 else -1


def _compose_branch(k: int, i: int, n: int, last_branch) -> int:
    """Branch ``i`` from the last branch: ``l^1_n = l^k_{n-1}``,
    ``l^i_n = sum_{m=1}^{i} l^k_{n-m}`` for ``1 < i < k``, ``l^k_n`` itself."""
    if i == k:
        return last_branch(n)
    if i == 1:
        return last_branch(n - 1)
    return sum(last_branch(n - m) for m in range(1, i + 1))


def _check(k: int, i: int, n: int) -> None:
    check_order(k)
    check_branch(k, i)
    if n < 1:
        raise IndexOutOfDomain(f"partition forms are stated for n >= 1, got {n}")


def fib_combinatorial(k: int, i: int, n: int) -> int:
    """Branch-i Fibonacci value (all-ones coefficients) as multinomial sums."""
    _check(k, i, n)
    if i == 1:
        return multinomial_sum(k, n)
    if i == k:
        return multinomial_sum(k, n - 1)
    return sum(multinomial_sum(k, n - m) for m in range(1, k - i + 2))


def fib_k_from_tail_partitions(k: int, n: int, shift: int = 0) -> int:
    """``f^k_{n-shift}`` as ``sum_{m |- n-shift+k-1} m_k/|m| * multinomial(m)``."""
    check_order(k)
    if not 0 <= shift <= n - 1:
        raise IndexOutOfDomain(f"shift must satisfy 0 <= shift <= n-1, got shift={shift}, n={n}")
    return tail_weighted_sum(k, n - shift + k - 1)


def lucas_from_weighted_partitions(k: int, i: int, n: int, literal: bool = False) -> int:
    """Branch-i Lucas value from ``sum_{a |- w} w/|a| * multinomial(a)`` sums."""
    _check(k, i, n)

    def last(w: int) -> int:
        if w >= 1:
            return lucas_weighted_sum(k, w)
        if w == 0:
            return k
        return 0 if literal else _lucas_k_boundary(k, w)

    return _compose_branch(k, i, n, last)


def lucas_from_fib_partitions(k: int, i: int, n: int, literal: bool = False) -> int:
    """Branch-i Lucas value from ``sum_j j * sum_{a |- w-j} multinomial(a)``."""
    _check(k, i, n)

    def last(w: int) -> int:
        if w >= 1 or literal:
            return sum(j * multinomial_sum(k, w - j) for j in range(1, k + 1))
        return _lucas_k_boundary(k, w)

    return _compose_branch(k, i, n, last)


def lucas_from_tail_partitions(k: int, i: int, n: int, literal: bool = False) -> int:
    """Branch-i Lucas value from ``sum_j j * f^k_{w+1-j}`` with each ``f^k`` a
    tail-weighted partition sum of weight ``w - j + k``."""
    _check(k, i, n)

    def last(w: int) -> int:
        if w >= 1 or literal:
            # weight 0 only arises in literal mode; its 0/0 weight is read as 0
            return sum(j * tail_weighted_sum(k, w - j + k) for j in range(1, k + 1)
                       if w - j + k != 0)
        return _lucas_k_boundary(k, w)

    return _compose_branch(k, i, n, last)


def binom(n: int, s: int) -> int:
    """Binomial coefficient that is zero unless ``0 <= s <= n``."""
    if s < 0 or n < s:
        return 0
    return factorial(n) // (factorial(s) * factorial(n - s))


def lucas2_binomial(n: int) -> int:
    """Ordinary Lucas number ``l_n`` as ``sum_{j=1}^{2} j sum_{s} C(n-j-s, s)``."""
    if n < 1:
        raise IndexOutOfDomain(f"defined for n >= 1, got {n}")
    total = 0
    for j in (1, 2):
        top = -((j - n) // 2)  # ceil((n - j) / 2)
        total += j * sum(binom(n - j - s, s) for s in range(0, top + 1))
    return total
