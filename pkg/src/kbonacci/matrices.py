"""Exact integer matrices for the order-k recurrences.

Two companion layouts are in play and they are easy to mix up:

* :func:`companion` puts the coefficient row on top, with the identity on the
  subdiagonal.  Its powers are the branch windows ``F~_n`` and it drives the
  ``L~_n = A^n L~_0`` relations.
* :func:`companion_bottom` has ones on the superdiagonal and the reversed
  coefficients ``(t_k, ..., t_1)`` as its last row.  Row vectors are acted on
  from the right (``v -> v @ A``); the orbit matrices and the trace/Lucas
  polynomial relation use this layout.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import DimensionMismatch, IndexOutOfDomain, NonInvertibleRecurrence
from .sequences import check_order, coefficients, kso_fib, kso_lucas


@dataclass(frozen=True)
class ExactMatrix:
    """Dense matrix of Python integers, stored row-major as nested tuples."""

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise DimensionMismatch("ragged matrix rows")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "ExactMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, size: int) -> "ExactMatrix":
        return cls(tuple(tuple(int(r == c) for c in range(size)) for r in range(size)))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def __getitem__(self, rc: tuple[int, int]) -> int:
        r, c = rc
        return self.rows[r][c]

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        n, m = self.shape
        m2, p = other.shape
        if m != m2:
            raise DimensionMismatch(f"cannot multiply {n}x{m} by {m2}x{p}")
        cols = list(zip(*other.rows))
        return ExactMatrix(tuple(
            tuple(sum(a * b for a, b in zip(row, col)) for col in cols) for row in self.rows))

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(tuple(zip(*self.rows)))

    def trace(self) -> int:
        n, m = self.shape
        if n != m:
            raise DimensionMismatch("trace of a non-square matrix")
        return sum(self.rows[i][i] for i in range(n))

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


def companion(k: int, c: Optional[Sequence[int]] = None) -> ExactMatrix:
    """Coefficient row on top, identity below it (``A_1`` when ``c`` is all ones)."""
    c = coefficients(k, c)
    rows = [c] + [tuple(int(col == r - 1) for col in range(k)) for r in range(1, k)]
    return ExactMatrix(tuple(rows))


def companion_bottom(k: int, t: Optional[Sequence[int]] = None) -> ExactMatrix:
    """Superdiagonal ones with last row ``(t_k, ..., t_1)``."""
    t = coefficients(k, t)
    rows = [tuple(int(col == r + 1) for col in range(k)) for r in range(k - 1)]
    rows.append(tuple(reversed(t)))
    return ExactMatrix(tuple(rows))


def companion_inverse(k: int, c: Optional[Sequence[int]] = None) -> ExactMatrix:
    """Integer inverse of :func:`companion`; requires ``c_k = +-1``."""
    c = coefficients(k, c)
    if c[-1] not in (1, -1):
        raise NonInvertibleRecurrence(f"companion inverse is not integral for c_k = {c[-1]}")
    # A maps (x_{n-1}, ..., x_{n-k}) to (x_n, ..., x_{n-k+1}); the inverse shifts
    # up and recovers x_{n-k} = c_k (x_n - c_1 x_{n-1} - ... - c_{k-1} x_{n-k+1}).
    rows = [tuple(int(col == r + 1) for col in range(k)) for r in range(k - 1)]
    rows.append((c[-1],) + tuple(-c[-1] * c[j] for j in range(k - 1)))
    return ExactMatrix(tuple(rows))


def mat_power_naive(m: ExactMatrix, n: int) -> ExactMatrix:
    """Repeated multiplication; test oracle for :func:`mat_power`."""
    size, cols = m.shape
    if size != cols:
        raise DimensionMismatch("power of a non-square matrix")
    out = ExactMatrix.identity(size)
    for _ in range(n):
        out = out @ m
    return out


def mat_power(m: ExactMatrix, n: int) -> ExactMatrix:
    """``m**n`` by binary exponentiation, ``n >= 0``."""
    size, cols = m.shape
    if size != cols:
        raise DimensionMismatch("power of a non-square matrix")
    if n < 0:
        raise IndexOutOfDomain("negative matrix power; use companion_inverse")
    result = ExactMatrix.identity(size)
    base = m
    while n:
        if n & 1:
            result = result @ base
        n >>= 1
        if n:
            base = base @ base
    return result


def f_tilde(k: int, c: Optional[Sequence[int]], n: int) -> ExactMatrix:
    """Entry ``(r, i-1)`` is the branch-i Fibonacci value at index ``n - r``."""
    c = coefficients(k, c)
    return ExactMatrix(tuple(
        tuple(kso_fib(k, c, i, n - r) for i in range(1, k + 1)) for r in range(k)))


def l_tilde_0(k: int) -> ExactMatrix:
    """The Lucas boundary block.

    Row ``r`` reads ``-1, -2, ...`` up to the anti-diagonal entry ``k + r`` in
    column ``k - r``, then ``k - i - 1`` to its right::

        k = 3:  -1 -2  3
                -1  4 -1
                 5  0 -1
    """
    check_order(k)
    rows = []
    for r in range(k):
        anti = k - r
        rows.append(tuple(-i if i < anti else (k + r if i == anti else k - i - 1)
                          for i in range(1, k + 1)))
    return ExactMatrix(tuple(rows))


def l_tilde(k: int, n: int) -> ExactMatrix:
    """Entry ``(r, i-1)`` is the branch-i Lucas value at index ``n - r``."""
    check_order(k)
    return ExactMatrix(tuple(
        tuple(kso_lucas(k, i, n - r) for i in range(1, k + 1)) for r in range(k)))


@dataclass(frozen=True)
class InfiniteMatrixWindow:
    """Rows ``row_lo..row_hi`` of a doubly infinite orbit matrix."""

    k: int
    t: tuple[int, ...]
    row_lo: int
    row_hi: int
    entries: tuple[tuple[int, ...], ...]

    def row(self, n: int) -> tuple[int, ...]:
        if not self.row_lo <= n <= self.row_hi:
            raise IndexOutOfDomain(f"row {n} outside window {self.row_lo}..{self.row_hi}")
        return self.entries[n - self.row_lo]

    def right_column(self) -> list[int]:
        return [r[-1] for r in self.entries]

    def as_matrix(self) -> ExactMatrix:
        return ExactMatrix(self.entries)


def orbit_step(t: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    """``v @ companion_bottom(k, t)`` without building the matrix."""
    k = len(t)
    last = v[-1]
    return (last * t[-1],) + tuple(v[j - 1] + last * t[k - j - 1] for j in range(1, k))


def orbit_step_back(t: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    """The row ``u`` with ``orbit_step(t, u) == v``."""
    k = len(t)
    if t[-1] == 0:
        raise NonInvertibleRecurrence("backward orbit rows need t_k != 0")
    last, rem = divmod(v[0], t[-1])
    if rem:
        raise NonInvertibleRecurrence(f"backward orbit row is not integral for t_k = {t[-1]}")
    return tuple(v[j] - last * t[k - j - 1] for j in range(1, k)) + (last,)


def _orbit(t: tuple[int, ...], anchor: int, anchor_rows: list[tuple[int, ...]],
           row_lo: int, row_hi: int) -> tuple[tuple[int, ...], ...]:
    rows = {anchor + j: r for j, r in enumerate(anchor_rows)}
    lo, hi = anchor, anchor + len(anchor_rows) - 1
    while lo > row_lo:
        rows[lo - 1] = orbit_step_back(t, rows[lo])
        lo -= 1
    while hi < row_hi:
        rows[hi + 1] = orbit_step(t, rows[hi])
        hi += 1
    return tuple(rows[n] for n in range(row_lo, row_hi + 1))


def derivative_vector(k: int, t: Optional[Sequence[int]] = None) -> tuple[int, ...]:
    """Coefficients of P'(x) for P(x) = x^k - t_1 x^(k-1) - ... - t_k, constant term first."""
    t = coefficients(k, t)
    return tuple(-j * t[k - j - 1] for j in range(1, k)) + (k,)


def d_infty_window(k: int, t: Optional[Sequence[int]], row_lo: int, row_hi: int) -> InfiniteMatrixWindow:
    """Rows of the orbit of the derivative vector, which sits at row 0.

    The last column is the Lucas polynomial sequence evaluated at ``t``.
    """
    t = coefficients(k, t)
    if row_lo > row_hi:
        raise ValueError(f"empty row range {row_lo}..{row_hi}")
    entries = _orbit(t, 0, [derivative_vector(k, t)], row_lo, row_hi)
    return InfiniteMatrixWindow(k, t, row_lo, row_hi, entries)


def a_infty_window(k: int, t: Optional[Sequence[int]], row_lo: int, row_hi: int) -> InfiniteMatrixWindow:
    """Rows of the orbit whose identity block occupies rows ``1-k..0``.

    The last column is the Fibonacci polynomial sequence evaluated at ``t``.
    """
    t = coefficients(k, t)
    if row_lo > row_hi:
        raise ValueError(f"empty row range {row_lo}..{row_hi}")
    ident = [tuple(int(c == r) for c in range(k)) for r in range(k)]
    entries = _orbit(t, 1 - k, ident, row_lo, row_hi)
    return InfiniteMatrixWindow(k, t, row_lo, row_hi, entries)


def schur_row(t: Sequence[int], n: int) -> list[int]:
    """``S_(0) .. S_(n)`` with ``S_(m) = sum_{j=1}^{m} t_j S_(m-j)``, ``t_j = 0`` for j > k."""
    s = [1]
    k = len(t)
    for m in range(1, n + 1):
        s.append(sum(t[j - 1] * s[m - j] for j in range(1, min(m, k) + 1)))
    return s


def hook_schur(t: Sequence[int], n: int, r: int) -> int:
    """Hook-shape value ``S_(n-r, 1^r) = (-1)^r sum_{j=r+1}^{n} t_j S_(n-j)``."""
    t = tuple(int(v) for v in t)
    if not 0 <= r <= n:
        raise IndexOutOfDomain(f"hook needs 0 <= r <= n, got r={r}, n={n}")
    if n == 0:
        return 1  # S_(0); the alternating sum is empty there
    s = schur_row(t, n)
    k = len(t)
    total = sum(t[j - 1] * s[n - j] for j in range(r + 1, min(n, k) + 1))
    return -total if r % 2 else total


def hook_power_row(t: Sequence[int], n: int) -> tuple[int, ...]:
    """Last row of ``companion_bottom(k, t)**n`` written with hook values:
    column j holds ``(-1)^(k-j) S_(n, 1^(k-j))``."""
    k = len(t)
    return tuple((-1) ** (k - j) * hook_schur(t, n + k - j, k - j) for j in range(1, k + 1))
