"""Registry of Fibonacci/Lucas identities and an exhaustive grid checker.

Each :class:`IdentityDescriptor` pairs two evaluation closures over a parameter
point ``(k, i, n, m)``.  Sequence values come from the recurrence engine via an
:class:`Evaluator`, which also records whether any index fell below the
boundary window (backward extension).
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field, replace
from typing import Any, Callable, Iterator, Optional

from . import matrices, partitions, polynomials
from .errors import DomainViolation, UnknownIdentity
from .sequences import gok_fib, gok_lucas, kso_fib, kso_lucas

TRACE_COEFFICIENT_SETS = ("ones", "two-then-ones", "ascending")


def trace_coefficients(k: int, which: int) -> tuple[int, ...]:
    """Coefficient vectors ``(1,...,1)``, ``(2,1,...,1)`` and ``(1,2,...,k)``."""
    name = TRACE_COEFFICIENT_SETS[which]
    if name == "ones":
        return (1,) * k
    if name == "two-then-ones":
        return (2,) + (1,) * (k - 1)
    return tuple(range(1, k + 1))


class Evaluator:
    """Cached recurrence-backend lookups that note backward extension."""

    def __init__(self):
        self.extension_used = False
        self._cache: dict[tuple, int] = {}

    def _get(self, key: tuple, fn: Callable[[], int]) -> int:
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = fn()
            return value

    def f(self, k: int, i: int, n: int) -> int:
        """Branch-i Fibonacci, all-ones coefficients."""
        if n < 1 - k:
            self.extension_used = True
        return self._get(("f", k, i, n), lambda: kso_fib(k, None, i, n))

    def l(self, k: int, i: int, n: int) -> int:
        """Branch-i Lucas."""
        if n < 1 - k:
            self.extension_used = True
        return self._get(("l", k, i, n), lambda: kso_lucas(k, i, n))

    def gf(self, k: int, n: int) -> int:
        return self._get(("gf", k, n), lambda: gok_fib(k, n))

    def gl(self, k: int, n: int) -> int:
        if n < 1 - k:
            self.extension_used = True
        return self._get(("gl", k, n), lambda: gok_lucas(k, n))


# --- closed forms shared with the acceptance suite -------------------------

def lucas_k_via_fib_differences(f, k: int, n: int) -> int:
    """``k f^k_{n+1} - sum_{j=2}^{k} (k-j+1) f^k_{n+2-j}``."""
    return k * f(k, k, n + 1) - sum((k - j + 1) * f(k, k, n + 2 - j) for j in range(2, k + 1))


def lucas_k_via_fib_weights(f, k: int, n: int) -> int:
    """``sum_{j=1}^{k} j f^k_{n+1-j}``."""
    return sum(j * f(k, k, n + 1 - j) for j in range(1, k + 1))


def lucas_branch_via_last(l, k: int, i: int, n: int) -> int:
    """Branch i of the Lucas family from its last branch."""
    if i == 1:
        return l(k, k, n - 1)
    if i == k:
        return l(k, k, n)
    return sum(l(k, k, n - m) for m in range(1, i + 1))


def triangular_weight(k: int, i: int, j: int) -> int:
    """Coefficient ``d_j`` of ``f^k_{n-j}`` in the single-sum form of branch i."""
    if j <= i:
        return j * (j + 1) // 2
    if j <= k - 1:
        return j * (j + 1) // 2 - (j - i) * (j - i + 1) // 2
    return k * (k + 1) // 2 - (j - i) * (j - i + 1) // 2


def lucas_branch_single_sum(f, k: int, i: int, n: int) -> int:
    return sum(triangular_weight(k, i, j) * f(k, k, n - j) for j in range(1, k + i))


def lucas_branch_from_differences(f, k: int, i: int, n: int) -> int:
    if i == 1:
        return k * f(k, k, n) - sum((k - j + 1) * f(k, k, n + 1 - j) for j in range(2, k + 1))
    if i == k:
        return lucas_k_via_fib_differences(f, k, n)
    return (sum(k * f(k, k, n - m + 1) for m in range(1, i + 1))
            - sum((k - j + 1) * f(k, k, n - m - j + 2)
                  for m in range(1, i + 1) for j in range(2, k + 1)))


def lucas_branch_from_weights(f, k: int, i: int, n: int) -> int:
    if i == 1:
        return sum(j * f(k, k, n - j) for j in range(1, k + 1))
    if i == k:
        return lucas_k_via_fib_weights(f, k, n)
    return sum(j * f(k, k, n - m - j + 1) for m in range(1, i + 1) for j in range(1, k + 1))


def addition_terms(f, l, k: int, i: int, n: int, m: int) -> list[int]:
    """Per-``j`` summands of ``l^i_{n+m}`` written with ``l^k_{m-j}`` and
    sums of ``f^s_n`` over a sliding block of branches ``s``; ``1 <= i <= k-1``."""
    terms = []
    for j in range(1, k + i):
        if j <= i:
            lo, hi = 1, j
        elif j <= k:
            lo, hi = j - i + 1, j
        else:
            lo, hi = j - i + 1, k
        block = sum(f(k, s, n) for s in range(lo, hi + 1))  # empty when lo > hi
        terms.append(l(k, k, m - j) * block)
    return terms


def lucas_poly_from_fib_polys(k: int, n: int) -> polynomials.SparsePolynomial:
    acc = polynomials.fib_poly(k, n).scale(k)
    for j in range(2, k + 1):
        acc = acc - polynomials.fib_poly(k, n + 1 - j).times_variable(j - 1).scale(k - j + 1)
    return acc


def fib_branch_from_last(f, k: int, i: int, n: int) -> int:
    return sum(f(k, k, n - m + 1) for m in range(1, k - i + 2))


# --- registry ---------------------------------------------------------------

@dataclass(frozen=True)
class Grid:
    """Inclusive ranges; ``i`` is always ``branches(k)`` of the descriptor."""

    k: tuple[int, int]
    n: tuple[int, int]
    m: tuple[int, int] = (0, 0)

    def restrict(self, k_max: Optional[int] = None, n_max: Optional[int] = None,
                 k_only: Optional[int] = None) -> "Grid":
        k_lo, k_hi = self.k
        if k_max is not None:
            k_hi = min(k_hi, k_max)
        if k_only is not None:
            k_lo, k_hi = max(k_lo, k_only), min(k_hi, k_only)
        n_lo, n_hi = self.n
        if n_max is not None:
            n_hi = min(n_hi, n_max)
        return replace(self, k=(k_lo, k_hi), n=(n_lo, n_hi))

    def as_dict(self) -> dict:
        return {"k": list(self.k), "n": list(self.n), "m": list(self.m)}


@dataclass(frozen=True)
class IdentityDescriptor:
    id: str
    statement: str
    lhs: Callable[..., Any]
    rhs: Callable[..., Any]
    default_grid: Grid
    k_min: int = 2
    k_max: Optional[int] = None
    n_min: Optional[int] = None
    branches: Optional[Callable[[int], range]] = None
    uses_m: bool = False
    valid: Callable[..., bool] = field(default=lambda **p: True)

    def points(self, grid: Grid) -> Iterator[dict]:
        for k in range(grid.k[0], grid.k[1] + 1):
            branch_range = self.branches(k) if self.branches else [None]
            for i in branch_range:
                for n in range(grid.n[0], grid.n[1] + 1):
                    for m in (range(grid.m[0], grid.m[1] + 1) if self.uses_m else [None]):
                        p = {"k": k}
                        if i is not None:
                            p["i"] = i
                        p["n"] = n
                        if m is not None:
                            p["m"] = m
                        if self.valid(**p):
                            yield p

    def check_grid(self, grid: Grid) -> None:
        if grid.k[0] <= grid.k[1]:
            if grid.k[0] < self.k_min or (self.k_max is not None and grid.k[1] > self.k_max):
                raise DomainViolation(
                    f"{self.id}: k range {grid.k} outside k >= {self.k_min}"
                    + (f", k <= {self.k_max}" if self.k_max is not None else ""))
        if self.n_min is not None and grid.n[0] <= grid.n[1] and grid.n[0] < self.n_min:
            raise DomainViolation(f"{self.id}: n range {grid.n} starts below {self.n_min}")


@dataclass
class Failure:
    params: dict
    lhs: Any
    rhs: Any


@dataclass
class IdentityReport:
    id: str
    grid: Grid
    size: int
    failures: list[Failure]
    extension_used: bool
    ms: float

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_obj(self, timing: bool = True) -> dict:
        return {
            "id": self.id,
            "grid": dict(self.grid.as_dict(), size=self.size),
            "pass": self.passed,
            "failures": [{"params": f.params, "lhs": render_value(f.lhs), "rhs": render_value(f.rhs)}
                         for f in self.failures],
            "extension_used": self.extension_used,
            "ms": round(self.ms, 3) if timing else 0,
        }


def render_value(value: Any) -> Any:
    if isinstance(value, matrices.ExactMatrix):
        return [[str(x) for x in row] for row in value.rows]
    return str(value)


def _all_branches(k: int) -> range:
    return range(1, k + 1)


def _build_registry() -> list[IdentityDescriptor]:
    D = IdentityDescriptor
    reg = [
        D("index-shift-fib", "f^k_{k,n} = f_{k,k+n-2}",
          lhs=lambda ev, k, n: ev.f(k, k, n),
          rhs=lambda ev, k, n: ev.gf(k, k + n - 2),
          default_grid=Grid((2, 6), (1, 40)), n_min=1),
        D("index-shift-lucas", "l^k_{k,n} = l_{k,n}",
          lhs=lambda ev, k, n: ev.l(k, k, n),
          rhs=lambda ev, k, n: ev.gl(k, n),
          default_grid=Grid((2, 6), (-5, 40)),
          valid=lambda k, n: n >= 1 - k),
        D("thm-2.6", "l^k_{k,n} = k f^k_{k,n+1} - sum_{j=2}^{k} (k-j+1) f^k_{k,n+2-j}",
          lhs=lambda ev, k, n: ev.l(k, k, n),
          rhs=lambda ev, k, n: lucas_k_via_fib_differences(ev.f, k, n),
          default_grid=Grid((2, 6), (0, 40)), n_min=0),
        D("thm-2.6-gok", "l_{k,n} = k f_{k,n+k-1} - sum_{j=2}^{k} (k-j+1) f_{k,n+k-j}",
          lhs=lambda ev, k, n: ev.gl(k, n),
          rhs=lambda ev, k, n: k * ev.gf(k, n + k - 1)
          - sum((k - j + 1) * ev.gf(k, n + k - j) for j in range(2, k + 1)),
          default_grid=Grid((2, 6), (1, 40)), n_min=1),
        D("ex-2.5-k2", "l^2_{2,n} = 2 f^2_{2,n+1} - f^2_{2,n}",
          lhs=lambda ev, k, n: ev.l(2, 2, n),
          rhs=lambda ev, k, n: 2 * ev.f(2, 2, n + 1) - ev.f(2, 2, n),
          default_grid=Grid((2, 2), (0, 40)), k_max=2, n_min=0),
        D("ex-2.5-k3", "l^3_{3,n} = 3 f^3_{3,n+1} - 2 f^3_{3,n} - f^3_{3,n-1}",
          lhs=lambda ev, k, n: ev.l(3, 3, n),
          rhs=lambda ev, k, n: 3 * ev.f(3, 3, n + 1) - 2 * ev.f(3, 3, n) - ev.f(3, 3, n - 1),
          default_grid=Grid((3, 3), (0, 40)), k_min=3, k_max=3, n_min=0),
        D("thm-2.7", "G_{k,n}(t) = k F_{k,n}(t) - sum_{j=2}^{k} (k-j+1) t_{j-1} F_{k,n+1-j}(t)",
          lhs=lambda ev, k, n: polynomials.lucas_poly(k, n),
          rhs=lambda ev, k, n: lucas_poly_from_fib_polys(k, n),
          default_grid=Grid((2, 4), (0, 12)), n_min=0),
        D("thm-2.8", "l^k_{k,n} = sum_{j=1}^{k} j f^k_{k,n+1-j}",
          lhs=lambda ev, k, n: ev.l(k, k, n),
          rhs=lambda ev, k, n: lucas_k_via_fib_weights(ev.f, k, n),
          default_grid=Grid((2, 6), (0, 40)), n_min=0),
        D("lemma-2.9", "l^i_{k,n} = l^k_{k,n-1} (i=1); sum_{m=1}^{i} l^k_{k,n-m} (1<i<k); l^k_{k,n} (i=k)",
          lhs=lambda ev, k, i, n: ev.l(k, i, n),
          rhs=lambda ev, k, i, n: lucas_branch_via_last(ev.l, k, i, n),
          default_grid=Grid((2, 6), (0, 40)), branches=_all_branches, n_min=0),
        D("thm-2.10-i", "l^i_{k,n} = sum_{j=1}^{k+i-1} d_j f^k_{k,n-j}",
          lhs=lambda ev, k, i, n: ev.l(k, i, n),
          rhs=lambda ev, k, i, n: lucas_branch_single_sum(ev.f, k, i, n),
          default_grid=Grid((3, 6), (0, 40)), k_min=3, branches=_all_branches, n_min=0),
        D("thm-2.10-ii", "l^i_{k,n} via k f^k - sum (k-j+1) f^k, summed over m <= i",
          lhs=lambda ev, k, i, n: ev.l(k, i, n),
          rhs=lambda ev, k, i, n: lucas_branch_from_differences(ev.f, k, i, n),
          default_grid=Grid((2, 6), (0, 40)), branches=_all_branches, n_min=0),
        D("thm-2.10-iii", "l^i_{k,n} via sum_j j f^k, summed over m <= i",
          lhs=lambda ev, k, i, n: ev.l(k, i, n),
          rhs=lambda ev, k, i, n: lucas_branch_from_weights(ev.f, k, i, n),
          default_grid=Grid((2, 6), (0, 40)), branches=_all_branches, n_min=0),
        D("thm-2.12-addition", "l^i_{n+m} = sum_j l^k_{m-j} (sum of f^s_n over a block of branches s)",
          lhs=lambda ev, k, i, n, m: ev.l(k, i, n + m),
          rhs=lambda ev, k, i, n, m: sum(addition_terms(ev.f, ev.l, k, i, n, m)),
          default_grid=Grid((2, 5), (0, 15), (0, 15)),
          branches=lambda k: range(1, k), uses_m=True),
        D("fib-branch-sum", "f^i_{k,n} = sum_{m=1}^{k-i+1} f^k_{k,n-m+1}  (1<i<k)",
          lhs=lambda ev, k, i, n: ev.f(k, i, n),
          rhs=lambda ev, k, i, n: fib_branch_from_last(ev.f, k, i, n),
          default_grid=Grid((3, 6), (0, 40)), k_min=3, branches=lambda k: range(2, k)),
        D("lemma-2.3", "L~_{n+1} = A_1^{n+1} L~_0",
          lhs=lambda ev, k, n: matrices.l_tilde(k, n + 1),
          rhs=lambda ev, k, n: matrices.mat_power(matrices.companion(k), n + 1) @ matrices.l_tilde_0(k),
          default_grid=Grid((2, 5), (0, 30)), n_min=0),
        D("lemma-2.4", "L~_n = F~_n L~_0",
          lhs=lambda ev, k, n: matrices.l_tilde(k, n),
          rhs=lambda ev, k, n: matrices.f_tilde(k, None, n) @ matrices.l_tilde_0(k),
          default_grid=Grid((2, 5), (0, 30)), n_min=0),
        D("trace-lucas-poly", "tr(A_(k)^n) = G_{k,n}(t) for t in the coefficient test set (index m)",
          lhs=lambda ev, k, n, m: matrices.mat_power(
              matrices.companion_bottom(k, trace_coefficients(k, m)), n).trace(),
          rhs=lambda ev, k, n, m: polynomials.lucas_poly(k, n).evaluate(trace_coefficients(k, m)),
          default_grid=Grid((2, 4), (0, 15), (0, 2)), n_min=0, uses_m=True),
        D("eq-2.8", "f^i_{k,n} as multinomial sums over weighted partitions",
          lhs=lambda ev, k, i, n: ev.f(k, i, n),
          rhs=lambda ev, k, i, n: partitions.fib_combinatorial(k, i, n),
          default_grid=Grid((2, 5), (1, 25)), branches=_all_branches, n_min=1),
        D("lemma-2.16", "f^k_{k,n-s} = sum_{m |- n-s+k-1} m_k/|m| multinomial(m)  (shift s = m axis)",
          lhs=lambda ev, k, n, m: ev.f(k, k, n - m),
          rhs=lambda ev, k, n, m: partitions.fib_k_from_tail_partitions(k, n, m),
          default_grid=Grid((2, 5), (1, 25), (0, 24)), n_min=1, uses_m=True,
          valid=lambda k, n, m: m <= n - 1),
        D("cor-2.17", "l^i_{k,n} from tail-weighted partition sums",
          lhs=lambda ev, k, i, n: ev.l(k, i, n),
          rhs=lambda ev, k, i, n: partitions.lucas_from_tail_partitions(k, i, n),
          default_grid=Grid((2, 5), (1, 25)), branches=_all_branches, n_min=1),
        D("cor-2.18", "l^i_{k,n} from n/|a|-weighted partition sums",
          lhs=lambda ev, k, i, n: ev.l(k, i, n),
          rhs=lambda ev, k, i, n: partitions.lucas_from_weighted_partitions(k, i, n),
          default_grid=Grid((2, 5), (1, 25)), branches=_all_branches, n_min=1),
        D("cor-2.19", "l^i_{k,n} from j-weighted multinomial sums",
          lhs=lambda ev, k, i, n: ev.l(k, i, n),
          rhs=lambda ev, k, i, n: partitions.lucas_from_fib_partitions(k, i, n),
          default_grid=Grid((2, 5), (1, 25)), branches=_all_branches, n_min=1),
        D("cor-2.20", "l_n = sum_{j=1}^{2} j sum_s C(n-j-s, s)",
          lhs=lambda ev, k, n: ev.l(2, 2, n),
          rhs=lambda ev, k, n: partitions.lucas2_binomial(n),
          default_grid=Grid((2, 2), (1, 40)), k_max=2, n_min=1),
    ]
    ids = [d.id for d in reg]
    assert len(ids) == len(set(ids)), "duplicate identity id"
    return reg


_REGISTRY = _build_registry()
_BY_ID = {d.id: d for d in _REGISTRY}


def registry() -> list[IdentityDescriptor]:
    return list(_REGISTRY)


def get(identity_id: str) -> IdentityDescriptor:
    try:
        return _BY_ID[identity_id]
    except KeyError:
        raise UnknownIdentity(f"no identity named {identity_id!r}") from None


def check(identity_id: str, grid: Optional[Grid] = None) -> IdentityReport:
    """Compare both sides exactly at every point of ``grid`` (default: the
    descriptor's own grid).  Failures are listed smallest ``k`` then ``n`` first."""
    desc = get(identity_id)
    grid = grid or desc.default_grid
    desc.check_grid(grid)
    ev = Evaluator()
    failures = []
    size = 0
    start = time.perf_counter()
    for p in desc.points(grid):
        size += 1
        lhs, rhs = desc.lhs(ev, **p), desc.rhs(ev, **p)
        if lhs != rhs:
            failures.append(Failure(p, lhs, rhs))
    ms = (time.perf_counter() - start) * 1000
    failures.sort(key=lambda f: (f.params["k"], f.params["n"], tuple(f.params.values())))
    return IdentityReport(desc.id, grid, size, failures, ev.extension_used, ms)


def evaluations(identity_id: str, grid: Optional[Grid] = None) -> Iterator[tuple[dict, Any, Any]]:
    """Yield ``(params, lhs, rhs)`` for every grid point, in grid order."""
    desc = get(identity_id)
    grid = grid or desc.default_grid
    desc.check_grid(grid)
    ev = Evaluator()
    for p in desc.points(grid):
        yield p, desc.lhs(ev, **p), desc.rhs(ev, **p)


def sweep(k_max: Optional[int] = None, n_max: Optional[int] = None,
          k_only: Optional[int] = None, ids: Optional[list[str]] = None) -> list[IdentityReport]:
    """Run every (or the named) identity on its default grid, clipped by the
    optional limits.  Identities whose domain misses the limits get an empty grid."""
    reports = []
    for desc in (registry() if ids is None else [get(i) for i in ids]):
        grid = desc.default_grid.restrict(k_max=k_max, n_max=n_max, k_only=k_only)
        reports.append(check(desc.id, grid))
    return reports
