"""Acceptance criteria, one test each.  Every test prints a PASS/FAIL line."""
import io

import pytest

from kbonacci import backends, binet, identities, partitions, polynomials
from kbonacci.cli import main
from kbonacci.errors import NonIntegralCoefficient, NonIntegralSum
from kbonacci.identities import Evaluator, addition_terms, trace_coefficients
from kbonacci.matrices import (a_infty_window, companion, companion_bottom, d_infty_window,
                               f_tilde, l_tilde, l_tilde_0, mat_power)
from kbonacci.sequences import Family, SequenceSpec, kso_fib, kso_lucas, sequence_table


@pytest.fixture
def report(request, capsys):
    def emit(ok: bool, detail: str = ""):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} {request.node.name}{': ' + detail if detail else ''}")
        assert ok, detail
    return emit


def test_criterion_01_golden_sequence(report):
    got = [v for _, v in sequence_table(SequenceSpec(Family.KSOKL, 3, 2), -2, 3)]
    report(got == [0, 4, -2, 2, 4, 4], f"got {got}")


def test_criterion_02_golden_branch_from_last(report):
    ev = Evaluator()
    pts = {tuple(p.values()): (l, r) for p, l, r in identities.evaluations(
        "thm-2.10-iii", identities.Grid((4, 4), (4, 4)))}
    lhs, rhs = pts[(4, 3, 4)]
    report(lhs == rhs == 11 == kso_lucas(4, 3, 4) == ev.l(4, 3, 4), f"lhs={lhs} rhs={rhs}")


def test_criterion_03_golden_addition(report):
    ev = Evaluator()
    terms = addition_terms(ev.f, ev.l, 5, 3, 3, 4)
    ok = terms == [28, 24, 12, 55, -9, -5, -2] and sum(terms) == 103 == kso_lucas(5, 3, 7)
    report(ok, f"terms={terms}")


def test_criterion_04_golden_windows(report):
    d = d_infty_window(4, None, -3, 0).as_matrix().tolist()
    a = a_infty_window(3, None, -2, 1).as_matrix().tolist()
    ok = (d == [[7, 1, 0, -1], [-1, 6, 0, -1], [-1, -2, 5, -1], [-1, -2, -3, 4]]
          and a == [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1]])
    report(ok, f"d={d} a={a}")


def test_criterion_05_classical_reduction(report):
    fib, luc = [0, 1], [2, 1]
    for _ in range(29):
        fib.append(fib[-1] + fib[-2])
        luc.append(luc[-1] + luc[-2])
    ok = ([kso_fib(2, None, 2, n) for n in range(31)] == fib
          and [kso_lucas(2, 2, n) for n in range(31)] == luc)
    report(ok)


def test_criterion_06_identity_sweep(report):
    reports = identities.sweep()
    failed = [r.id for r in reports if not r.passed]
    out, err = io.StringIO(), io.StringIO()
    code = main(["check", "--all"], out=out, err=err)
    report(not failed and code == 0, f"{len(reports)} identities, failed={failed}, exit={code}")


def test_criterion_07_cross_backend(report):
    mismatches = []
    for family in Family:
        for k in range(2, 6):
            branches = range(1, k + 1) if family in (Family.KSOKF, Family.KSOKL) else [1]
            for i in branches:
                spec = SequenceSpec(family, k, i)
                for n in range(1, 26):
                    vals = {b: backends.value(spec, n, b) for b in backends.BACKENDS}
                    if len(set(vals.values())) != 1:
                        mismatches.append((family.value, k, i, n))
    worst = 0.0
    for k in range(2, 6):
        rs = binet.core_roots(k)
        for n in range(61):
            exact = kso_fib(k, None, k, n)
            for v in (binet.binet_fib(k, n, roots=rs), binet.vandermonde_fib(k, n, roots=rs)):
                worst = max(worst, abs(v.value - exact) / max(1, abs(exact)))
            for i in range(1, k + 1):
                exact = kso_lucas(k, i, n)
                for v in (binet.binet_lucas(k, i, n, roots=rs),
                          binet.vandermonde_lucas(k, i, n, roots=rs)):
                    worst = max(worst, abs(v.value - exact) / max(1, abs(exact)))
    report(not mismatches and worst < 1e-9,
           f"exact mismatches={mismatches[:5]}, worst float rel error={worst:.3e}")


def test_criterion_08_symbolic(report):
    bad = []
    for k in range(2, 5):
        for n in range(15):
            if polynomials.fib_poly(k, n) != polynomials.fib_poly_partition(k, n):
                bad.append(("fib", k, n))
            if n >= 1 and polynomials.lucas_poly(k, n) != polynomials.lucas_poly_partition(k, n):
                bad.append(("lucas", k, n))
        for n in range(13):
            if not polynomials.lucas_fib_residual(k, n).is_zero():
                bad.append(("residual", k, n))
    for n in range(21):
        if polynomials.fib2_combinatorial(n) != polynomials.fib_poly(2, n):
            bad.append(("k2", 2, n))
    report(not bad, f"bad={bad[:5]}")


def test_criterion_09_matrix_lemmas(report):
    bad = []
    for k in range(2, 6):
        a, l0 = companion(k), l_tilde_0(k)
        for n in range(31):
            if l_tilde(k, n) != f_tilde(k, None, n) @ l0:
                bad.append(("F~L~0", k, n))
            if l_tilde(k, n + 1) != mat_power(a, n + 1) @ l0:
                bad.append(("A^n+1 L~0", k, n))
    for k in range(2, 5):
        for which in range(3):
            t = trace_coefficients(k, which)
            ak = companion_bottom(k, t)
            for n in range(16):
                if mat_power(ak, n).trace() != polynomials.lucas_poly(k, n).evaluate(t):
                    bad.append(("trace", k, t, n))
    report(not bad, f"bad={bad[:5]}")


def test_criterion_10_integrality(report):
    try:
        identities.sweep()
        for k in range(2, 6):
            for w in range(1, 41):
                partitions.tail_weighted_sum(k, w)
                partitions.lucas_weighted_sum(k, w)
            for i in range(1, k + 1):
                for n in range(1, 26):
                    partitions.lucas_from_weighted_partitions(k, i, n)
                    partitions.lucas_from_tail_partitions(k, i, n)
                    partitions.fib_k_from_tail_partitions(k, n)
        for k in range(2, 5):
            for n in range(15):
                polynomials.lucas_poly_partition(k, n)
    except (NonIntegralCoefficient, NonIntegralSum) as exc:
        report(False, repr(exc))
    report(True)
