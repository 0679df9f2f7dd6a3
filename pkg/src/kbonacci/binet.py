"""Floating-point closed forms driven by the roots of the core polynomial.

``P(x) = x^k - t_1 x^(k-1) - ... - t_k``.  With distinct roots ``lam_i`` the last
Fibonacci branch is

    f^k_n = t_k * sum_i lam_i^(n+k-2) / P'(lam_i)

and, independently, the ``(1, k)`` entry of the n-th power of the top-row
companion matrix, obtained by Cramer's rule on the Vandermonde system.  Lucas
branches are fixed integer combinations of shifted ``f^k`` values.

Everything is double precision.  Each result carries a heuristic absolute
error estimate built from the root residuals and the conditioning of the
Vandermonde matrix.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from .errors import (IllConditioned, NoConvergence, NonInvertibleRecurrence, RangeExceeded,
                     RepeatedRoots)
from .sequences import check_branch, coefficients, ones

EPS = np.finfo(float).eps
MAX_ITER = 200
STEP_TOL = 1e-14
RESIDUAL_TOL = 1e-12
SEPARATION_TOL = 1e-8
N_CAP = 200


@dataclass(frozen=True)
class RootSet:
    k: int
    t: tuple[int, ...]
    roots: tuple[complex, ...]
    residual_bound: float
    distinct: bool

    def require_distinct(self) -> None:
        if not self.distinct:
            raise RepeatedRoots(f"core polynomial with t={self.t} has repeated roots")


@dataclass(frozen=True)
class ApproxValue:
    value: float
    abs_error_estimate: float
    imag_residue: float = 0.0


def _poly_coeffs(t: Sequence[int]) -> list[int]:
    """Coefficients of P, highest degree first."""
    return [1] + [-v for v in t]


def _horner(coeffs: Sequence[complex], z: complex) -> tuple[complex, complex, complex]:
    """P(z), P'(z), P''(z)/2."""
    p = dp = ddp = 0j
    for c in coeffs:
        ddp = ddp * z + dp
        dp = dp * z + p
        p = p * z + c
    return p, dp, ddp


def _poly_rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a = list(a)
    while len(a) >= len(b) and any(a):
        q = a[0] / b[0]
        for j in range(len(b)):
            a[j] -= q * b[j]
        a.pop(0)
    while a and a[0] == 0:
        a.pop(0)
    return a


def has_repeated_roots(t: Sequence[int]) -> bool:
    """Exact test: ``gcd(P, P')`` is nonconstant."""
    p = [Fraction(c) for c in _poly_coeffs(t)]
    k = len(p) - 1
    a, b = p, [Fraction(c * (k - j)) for j, c in enumerate(p[:-1])]
    while b:
        a, b = b, _poly_rem(a, b)
    return len(a) > 1


def _aberth(coeffs: list[int], max_iter: int) -> list[complex]:
    k = len(coeffs) - 1
    center = -coeffs[1] / k
    # Cauchy bound on |root - 0|, shifted to the centroid
    radius = 1 + max(abs(c) for c in coeffs[1:])
    z = [center + radius * cmath.exp(1j * (2 * math.pi * j / k + 0.4)) for j in range(k)]
    for _ in range(max_iter):
        biggest = 0.0
        for i in range(k):
            p, dp, _ = _horner(coeffs, z[i])
            if p == 0:
                continue
            ratio = p / dp if dp != 0 else p
            repel = sum(1 / (z[i] - z[j]) for j in range(k) if j != i)
            step = ratio / (1 - ratio * repel)
            z[i] -= step
            biggest = max(biggest, abs(step) / max(1.0, abs(z[i])))
        if biggest < STEP_TOL:
            return z
    raise NoConvergence(f"root iteration did not settle within {max_iter} sweeps")


def core_roots(k: int, t: Optional[Sequence[int]] = None, max_iter: int = MAX_ITER) -> RootSet:
    """Roots of ``x^k - t_1 x^(k-1) - ... - t_k`` by Aberth-Ehrlich iteration.

    Raises RepeatedRoots up front if ``P`` and ``P'`` share a factor.
    """
    t = coefficients(k, t)
    if has_repeated_roots(t):
        raise RepeatedRoots(f"core polynomial with t={t} has repeated roots")
    coeffs = _poly_coeffs(t)
    roots = _aberth(coeffs, max_iter)
    scale = max(1.0, max(abs(z) for z in roots))
    residual = max(abs(_horner(coeffs, z)[0]) for z in roots)
    if residual > RESIDUAL_TOL * (1 + max(abs(c) for c in coeffs)) * scale ** k:
        raise NoConvergence(f"root residual {residual:.3e} above tolerance")
    sep = min(abs(a - b) for n, a in enumerate(roots) for b in roots[n + 1:])
    distinct = sep > SEPARATION_TOL * scale
    return RootSet(k, t, tuple(roots), residual, distinct)


def _roots_for(k: int, t: Optional[Sequence[int]], roots: Optional[RootSet]) -> RootSet:
    rs = roots if roots is not None else core_roots(k, t)
    rs.require_distinct()
    return rs


def _check_range(n: int, cap: int) -> None:
    if abs(n) > cap:
        raise RangeExceeded(f"|n| = {abs(n)} exceeds the floating-point cap {cap}")


def _finish(total: complex, err: float) -> ApproxValue:
    imag = abs(total.imag)
    if imag > max(err, 1e-8 * abs(total.real) + 1e-12):
        raise IllConditioned(f"imaginary residue {imag:.3e} exceeds error estimate {err:.3e}")
    return ApproxValue(total.real, err, imag)


def _power_sum_terms(rs: RootSet, x: int) -> tuple[complex, float]:
    """``t_k * sum_i lam_i^(x+k-2) / P'(lam_i)`` (= f^k_x) and its error estimate."""
    coeffs = _poly_coeffs(rs.t)
    e = x + rs.k - 2
    total = 0j
    err = 0.0
    for lam in rs.roots:
        if lam == 0 and e < 0:
            raise NonInvertibleRecurrence("negative power of a zero root")
        _, dp, half_ddp = _horner(coeffs, lam)
        term = lam ** e / dp
        dlam = rs.residual_bound / abs(dp)
        rel = (abs(e) + rs.k + 2) * 4 * EPS + dlam * (abs(e) / max(abs(lam), 1e-300)
                                                       + 2 * abs(half_ddp / dp))
        total += term
        err += abs(term) * rel
    tk = rs.t[-1]
    return tk * total, abs(tk) * err


def binet_fib(k: int, n: int, t: Optional[Sequence[int]] = None,
              roots: Optional[RootSet] = None, cap: int = N_CAP) -> ApproxValue:
    """Approximate last-branch Fibonacci value ``f^k_n`` as a root power sum."""
    _check_range(n, cap)
    rs = _roots_for(k, t, roots)
    total, err = _power_sum_terms(rs, n)
    return _finish(total, err)


def _lucas_shifts(k: int, i: int, n: int) -> list[tuple[int, int]]:
    """``(weight, index)`` pairs with ``l^i_n = sum weight * f^k_index``."""
    check_branch(k, i)
    if i == 1:
        return [(j, n - j) for j in range(1, k + 1)]
    if i == k:
        return [(j, n - j + 1) for j in range(1, k + 1)]
    return [(j, n - m - j + 1) for m in range(1, i + 1) for j in range(1, k + 1)]


def binet_lucas(k: int, i: int, n: int, roots: Optional[RootSet] = None,
                cap: int = N_CAP) -> ApproxValue:
    """Approximate ``l^i_n`` (all-ones coefficients) from root power sums."""
    _check_range(n, cap)
    rs = _roots_for(k, ones(k), roots)
    total, err = 0j, 0.0
    for w, x in _lucas_shifts(k, i, n):
        s, e = _power_sum_terms(rs, x)
        total += w * s
        err += w * e
    return _finish(total, err)


class _Cramer:
    """Vandermonde system ``M x = d`` with ``M[j][r] = lam_j^(k-1-r)``.

    Replacing column ``k`` of ``M`` by ``d = (lam_j^(k-1+x))_j`` and taking
    the determinant ratio gives ``f^k_x``.
    """

    def __init__(self, rs: RootSet):
        k = rs.k
        self.rs = rs
        self.m = np.array([[lam ** (k - 1 - r) for r in range(k)] for lam in rs.roots],
                          dtype=complex)
        self.det = np.linalg.det(self.m)
        row_norms = np.linalg.norm(self.m, axis=1)
        if abs(self.det) < 1e-12 * float(np.prod(row_norms)):
            raise IllConditioned(f"Vandermonde determinant {abs(self.det):.3e} too small")
        sv = np.linalg.svd(self.m, compute_uv=False)
        self.inv_norm = 1.0 / sv[-1]
        self.cond = sv[0] / sv[-1]

    def fib(self, x: int) -> tuple[complex, float]:
        rs = self.rs
        k = rs.k
        e = k - 1 + x
        if e < 0 and any(lam == 0 for lam in rs.roots):
            raise NonInvertibleRecurrence("negative power of a zero root")
        d = np.array([lam ** e for lam in rs.roots], dtype=complex)
        replaced = self.m.copy()
        replaced[:, k - 1] = d
        ratio = complex(np.linalg.det(replaced) / self.det)
        coeffs = _poly_coeffs(rs.t)
        dd = 0.0
        for lam, dj in zip(rs.roots, d):
            dlam = rs.residual_bound / abs(_horner(coeffs, lam)[1])
            dd += abs(dj) * (abs(e) * dlam / max(abs(lam), 1e-300) + (abs(e) + 2) * EPS)
        err = 8 * k * EPS * self.cond * (abs(ratio) + self.inv_norm * float(np.linalg.norm(d)))
        err += self.inv_norm * dd
        return ratio, err


def vandermonde_fib(k: int, n: int, t: Optional[Sequence[int]] = None,
                    roots: Optional[RootSet] = None, cap: int = N_CAP) -> ApproxValue:
    """Approximate ``f^k_n`` as a ratio of Vandermonde determinants."""
    _check_range(n, cap)
    rs = _roots_for(k, t, roots)
    total, err = _Cramer(rs).fib(n)
    return _finish(total, err)


def vandermonde_lucas(k: int, i: int, n: int, roots: Optional[RootSet] = None,
                      cap: int = N_CAP) -> ApproxValue:
    """Approximate ``l^i_n`` (all-ones coefficients) from determinant ratios."""
    _check_range(n, cap)
    rs = _roots_for(k, ones(k), roots)
    cramer = _Cramer(rs)
    total, err = 0j, 0.0
    for w, x in _lucas_shifts(k, i, n):
        s, e = cramer.fib(x)
        total += w * s
        err += w * e
    return _finish(total, err)
