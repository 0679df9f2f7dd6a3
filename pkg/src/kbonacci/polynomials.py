"""Sparse multivariate Fibonacci and Lucas polynomials in ``t_1, ..., t_k``.

``F_{k,n}(t)`` and ``G_{k,n}(t)`` are built two ways: by the t-linear recurrence
and by closed-form sums over weighted partitions.  The two routes share no
code beyond the partition enumerator.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Mapping, Sequence

from .errors import DimensionMismatch, IndexOutOfDomain, NonIntegralCoefficient
from .partitions import enumerate_partitions, multinomial
from .sequences import check_order

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class SparsePolynomial:
    """Integer polynomial stored as ``{exponent vector: nonzero coefficient}``."""

    k: int
    terms: Mapping[Exponent, int]

    def __post_init__(self):
        clean = {}
        for exp, coef in self.terms.items():
            exp = tuple(exp)
            if len(exp) != self.k or any(e < 0 for e in exp):
                raise DimensionMismatch(f"bad exponent {exp} for k={self.k}")
            if coef:
                clean[exp] = clean.get(exp, 0) + int(coef)
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})

    @classmethod
    def zero(cls, k: int) -> "SparsePolynomial":
        return cls(k, {})

    @classmethod
    def constant(cls, k: int, c: int) -> "SparsePolynomial":
        return cls(k, {(0,) * k: c})

    @classmethod
    def variable(cls, k: int, j: int) -> "SparsePolynomial":
        """``t_j`` for ``1 <= j <= k``."""
        return cls(k, {tuple(int(v == j - 1) for v in range(k)): 1})

    def __eq__(self, other):
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.k == other.k and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def _check_k(self, other: "SparsePolynomial") -> None:
        if self.k != other.k:
            raise DimensionMismatch(f"k mismatch: {self.k} vs {other.k}")

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        self._check_k(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePolynomial(self.k, out)

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial(self.k, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return self + (-other)

    def scale(self, c: int) -> "SparsePolynomial":
        return SparsePolynomial(self.k, {e: c * v for e, v in self.terms.items()})

    def times_variable(self, j: int, power: int = 1) -> "SparsePolynomial":
        """Multiply by ``t_j ** power``."""
        out = {}
        for e, c in self.terms.items():
            e = list(e)
            e[j - 1] += power
            out[tuple(e)] = c
        return SparsePolynomial(self.k, out)

    def evaluate(self, t: Sequence[int]) -> int:
        if len(t) != self.k:
            raise DimensionMismatch(f"expected {self.k} values, got {len(t)}")
        total = 0
        for exp, coef in self.terms.items():
            term = coef
            for base, e in zip(t, exp):
                if e:
                    term *= base ** e
            total += term
        return total

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        """Graded lex order: higher total degree first, then lex descending."""
        return sorted(self.terms.items(), key=lambda it: (sum(it[0]), it[0]), reverse=True)

    def to_json_obj(self) -> dict:
        return {"k": self.k,
                "terms": [{"exp": list(e), "coef": str(c)} for e, c in self.sorted_terms()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj: Mapping) -> "SparsePolynomial":
        return cls(int(obj["k"]), {tuple(t["exp"]): int(t["coef"]) for t in obj["terms"]})

    @classmethod
    def from_json(cls, text: str) -> "SparsePolynomial":
        return cls.from_json_obj(json.loads(text))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for exp, coef in self.sorted_terms():
            factors = [f"t{j}" if e == 1 else f"t{j}^{e}"
                       for j, e in enumerate(exp, start=1) if e]
            mag = abs(coef)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            pieces.append(("-" if coef < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out


def _linear_step(k: int, window: list[SparsePolynomial]) -> SparsePolynomial:
    # t_1 P_n + t_2 P_{n-1} + ... + t_k P_{n-k+1}; window[-1] is P_n
    acc = SparsePolynomial.zero(k)
    for j in range(1, k + 1):
        acc = acc + window[-j].times_variable(j)
    return acc


def fib_poly(k: int, n: int) -> SparsePolynomial:
    """``F_{k,n}(t)``: zero for ``n < 0``, 1 at ``n = 0``, then the t-linear recurrence."""
    check_order(k)
    if n < 0:
        return SparsePolynomial.zero(k)
    window = [SparsePolynomial.zero(k)] * (k - 1) + [SparsePolynomial.constant(k, 1)]
    for _ in range(n):
        window = window[1:] + [_linear_step(k, window)]
    return window[-1]


def lucas_poly(k: int, n: int) -> SparsePolynomial:
    """``G_{k,n}(t)``, the power sums of the roots of the core polynomial.

    Starting from ``G_0 = k`` with zeros below, the plain t-linear step gives
    ``k t_n`` where the power sums need ``n t_n`` for ``1 <= n < k``; that
    correction (Newton's identities) is applied while ``n < k``.
    """
    check_order(k)
    if n < 0:
        return SparsePolynomial.zero(k)
    window = [SparsePolynomial.zero(k)] * (k - 1) + [SparsePolynomial.constant(k, k)]
    for m in range(1, n + 1):
        nxt = _linear_step(k, window)
        if m < k:
            nxt = nxt - SparsePolynomial.variable(k, m).scale(k - m)
        window = window[1:] + [nxt]
    return window[-1]


def _monomial(parts: Sequence[int]) -> Exponent:
    return tuple(parts)


def fib_poly_partition(k: int, n: int) -> SparsePolynomial:
    """``F_{k,n}(t) = sum_{a |- n} multinomial(a) t^a``."""
    check_order(k)
    if n < 0:
        return SparsePolynomial.zero(k)
    return SparsePolynomial(k, {_monomial(a.parts): multinomial(a)
                                for a in enumerate_partitions(n, k)})


def lucas_poly_partition(k: int, n: int) -> SparsePolynomial:
    """``G_{k,n}(t) = sum_{a |- n} n/|a| * multinomial(a) t^a`` for ``n >= 1``.

    ``n = 0`` returns the constant ``k``.
    """
    check_order(k)
    if n < 0:
        return SparsePolynomial.zero(k)
    if n == 0:
        return SparsePolynomial.constant(k, k)
    terms = {}
    for a in enumerate_partitions(n, k):
        coef = Fraction(n, a.size) * multinomial(a)
        if coef.denominator != 1:
            raise NonIntegralCoefficient(f"coefficient {coef} of t^{a.parts} in G_{k},{n}")
        terms[_monomial(a.parts)] = coef.numerator
    return SparsePolynomial(k, terms)


def fib2_combinatorial(n: int) -> SparsePolynomial:
    """``F_{2,n}(t) = sum_j (-1)^j C(n-j, j) t_1^(n-2j) (-t_2)^j``."""
    if n < 0:
        raise IndexOutOfDomain(f"defined for n >= 0, got {n}")
    terms = {}
    for j in range(0, -(-n // 2) + 1):
        if n - j < j:
            continue  # C(n-j, j) = 0
        # (-1)^j from the sum times (-1)^j from (-t_2)^j
        terms[(n - 2 * j, j)] = (-1) ** j * comb(n - j, j) * (-1) ** j
    return SparsePolynomial(2, terms)


def eval_poly(p: SparsePolynomial, t: Sequence[int]) -> int:
    return p.evaluate(t)


def lucas_fib_residual(k: int, n: int) -> SparsePolynomial:
    """``G_{k,n} - k F_{k,n} + sum_{j=2}^{k} (k-j+1) t_{j-1} F_{k,n+1-j}``; zero when
    the Lucas polynomials are the stated combination of Fibonacci polynomials."""
    check_order(k)
    if n < 0:
        raise IndexOutOfDomain(f"defined for n >= 0, got {n}")
    acc = lucas_poly(k, n) - fib_poly(k, n).scale(k)
    for j in range(2, k + 1):
        acc = acc + fib_poly(k, n + 1 - j).times_variable(j - 1).scale(k - j + 1)
    return acc
