import pytest
from hypothesis import given, strategies as st

from kbonacci.partitions import (WeightedPartition, enumerate_partitions, fib_combinatorial,
                                 fib_k_from_tail_partitions, lucas2_binomial,
                                 lucas_from_fib_partitions, lucas_from_tail_partitions,
                                 lucas_from_weighted_partitions, multinomial)
from kbonacci.polynomials import fib_poly_partition
from kbonacci.sequences import kso_fib, kso_lucas


def gf_counts(k, n_max):
    # coefficients of 1/((1-x)(1-x^2)...(1-x^k))
    c = [1] + [0] * n_max
    for part in range(1, k + 1):
        for n in range(part, n_max + 1):
            c[n] += c[n - part]
    return c


def test_enumeration_examples():
    assert [p.parts for p in enumerate_partitions(0, 3)] == [(0, 0, 0)]
    assert [p.parts for p in enumerate_partitions(4, 2)] == [(0, 2), (2, 1), (4, 0)]
    assert len(enumerate_partitions(3, 3)) == 3


@pytest.mark.parametrize("k", range(1, 6))
def test_enumeration_count_matches_generating_function(k):
    counts = gf_counts(k, 25)
    for n in range(26):
        parts = enumerate_partitions(n, k)
        assert len(parts) == counts[n]
        assert all(p.weight == n for p in parts)
        assert len({p.parts for p in parts}) == len(parts)


def test_multinomial_examples():
    assert multinomial(WeightedPartition((2, 1))) == 3
    assert multinomial(WeightedPartition((0, 0, 0))) == 1
    assert multinomial(WeightedPartition((3, 2, 1))) == 60


@pytest.mark.parametrize("fn,args,expected", [
    (fib_combinatorial, (2, 2, 4), 3), (fib_combinatorial, (3, 2, 3), 3),
    (fib_combinatorial, (2, 1, 1), 1),
    (fib_k_from_tail_partitions, (2, 4), 3), (fib_k_from_tail_partitions, (2, 1), 1),
    (lucas_from_weighted_partitions, (2, 2, 4), 7), (lucas_from_weighted_partitions, (3, 2, 3), 4),
    (lucas_from_fib_partitions, (2, 2, 3), 4), (lucas_from_fib_partitions, (2, 2, 1), 1),
    (lucas_from_fib_partitions, (4, 3, 4), 11),
    (lucas_from_tail_partitions, (2, 2, 3), 4), (lucas_from_tail_partitions, (3, 3, 1), 1),
    (lucas_from_tail_partitions, (5, 3, 7), 103),
    (lucas2_binomial, (3,), 4), (lucas2_binomial, (1,), 1), (lucas2_binomial, (6,), 18),
])
def test_examples(fn, args, expected):
    assert fn(*args) == expected


def test_shifted_tail_form():
    assert fib_k_from_tail_partitions(3, 5, shift=2) == kso_fib(3, None, 3, 3)
    assert lucas_from_weighted_partitions(2, 1, 2) == kso_lucas(2, 1, 2)


@pytest.mark.parametrize("k", range(2, 6))
def test_every_form_matches_recurrence(k):
    for i in range(1, k + 1):
        for n in range(1, 26):
            f, l = kso_fib(k, None, i, n), kso_lucas(k, i, n)
            assert fib_combinatorial(k, i, n) == f
            assert lucas_from_weighted_partitions(k, i, n) == l
            assert lucas_from_fib_partitions(k, i, n) == l
            assert lucas_from_tail_partitions(k, i, n) == l
        assert fib_k_from_tail_partitions(k, 20) == kso_fib(k, None, k, 20)


def test_lucas2_binomial_sequence():
    luc = [2, 1]
    for _ in range(30):
        luc.append(luc[-1] + luc[-2])
    assert [lucas2_binomial(n) for n in range(1, 31)] == luc[1:31]


@given(st.integers(2, 5), st.integers(1, 25))
def test_fib_branch_k_is_partition_polynomial(k, n):
    assert fib_combinatorial(k, k, n) == fib_poly_partition(k, n - 1).evaluate((1,) * k)


def test_literal_forms_agree_away_from_small_n():
    # the printed forms hold once every inner index is at least 1
    for k in range(2, 6):
        for i in range(1, k + 1):
            for n in range(i + 1, 26):
                l = kso_lucas(k, i, n)
                assert lucas_from_weighted_partitions(k, i, n, literal=True) == l
                assert lucas_from_fib_partitions(k, i, n, literal=True) == l
                assert lucas_from_tail_partitions(k, i, n, literal=True) == l
