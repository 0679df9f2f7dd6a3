import pytest
from hypothesis import given, strategies as st

from kbonacci.errors import IndexOutOfDomain, InvalidBranch, InvalidOrder, NonInvertibleRecurrence
from kbonacci.matrices import l_tilde_0
from kbonacci.sequences import (Family, SequenceSpec, gok_fib, gok_lucas, kso_fib, kso_lucas,
                                sequence_table)

FIB = [0, 1]
LUC = [2, 1]
for _ in range(40):
    FIB.append(FIB[-1] + FIB[-2])
    LUC.append(LUC[-1] + LUC[-2])


def naive_forward(window, c, steps):
    # window oldest first, c = (c1..ck)
    vals = list(window)
    for _ in range(steps):
        vals.append(sum(cj * vals[-j] for j, cj in enumerate(c, 1)))
    return vals


@pytest.mark.parametrize("k,c,i,n,expected", [
    (2, (1, 1), 2, 0, 0), (2, (1, 1), 2, 5, 5), (4, (1, 1, 1, 1), 4, 3, 2)])
def test_kso_fib_examples(k, c, i, n, expected):
    assert kso_fib(k, c, i, n) == expected


@pytest.mark.parametrize("k,i,n,expected", [(3, 2, -1, 4), (3, 2, 3, 4), (2, 2, 4, 7)])
def test_kso_lucas_examples(k, i, n, expected):
    assert kso_lucas(k, i, n) == expected


@pytest.mark.parametrize("k,n,expected", [(3, 2, 1), (3, 1, 0), (2, 6, 8)])
def test_gok_fib_examples(k, n, expected):
    assert gok_fib(k, n) == expected


@pytest.mark.parametrize("k,n,expected", [(4, 0, 4), (2, 1, 1), (3, 3, 7)])
def test_gok_lucas_examples(k, n, expected):
    assert gok_lucas(k, n) == expected


def test_table_examples():
    assert [v for _, v in sequence_table(SequenceSpec(Family.KSOKL, 3, 2), -2, 3)] == [0, 4, -2, 2, 4, 4]
    # boundary f_{2,1} = f_{2,2} = 1, consistent with f_{2,6} = 8
    assert [v for _, v in sequence_table(SequenceSpec(Family.GOKF, 2), 1, 6)] == [1, 1, 2, 3, 5, 8]
    assert sequence_table(SequenceSpec(Family.KSOKL, 2, 2), 0, 0) == [(0, 2)]


def test_errors():
    with pytest.raises(InvalidOrder):
        kso_fib(1, None, 1, 3)
    with pytest.raises(InvalidBranch):
        kso_lucas(3, 4, 1)
    with pytest.raises(IndexOutOfDomain):
        gok_fib(3, 0)
    with pytest.raises(NonInvertibleRecurrence):
        kso_fib(3, (1, 1, 0), 1, -5)
    with pytest.raises(IndexOutOfDomain):
        gok_lucas(3, -5, extend=False)


def test_classical_reduction():
    for n in range(31):
        assert kso_fib(2, None, 2, n) == FIB[n]
        assert kso_lucas(2, 2, n) == LUC[n]


@pytest.mark.parametrize("k", range(2, 7))
def test_boundary_matches_l0(k):
    l0 = l_tilde_0(k)
    for r in range(k):
        for i in range(1, k + 1):
            assert kso_lucas(k, i, -r) == l0[r, i - 1]


@pytest.mark.parametrize("k", range(2, 7))
def test_index_relations(k):
    for n in range(1, 31):
        assert kso_fib(k, None, k, n) == gok_fib(k, k + n - 2)
    for n in range(1 - k, 31):
        assert kso_lucas(k, k, n) == gok_lucas(k, n)


@given(k=st.integers(2, 5), data=st.data())
def test_forward_matches_naive(k, data):
    c = tuple(data.draw(st.lists(st.integers(-3, 3), min_size=k, max_size=k)))
    i = data.draw(st.integers(1, k))
    n = data.draw(st.integers(1, 30))
    window = [1 if j == 1 - n0 else 0 for j in [i] for n0 in range(1 - k, 1)]
    assert naive_forward(window, c, n)[-1] == kso_fib(k, c, i, n)


@given(k=st.integers(2, 6), data=st.data())
def test_backward_forward_roundtrip(k, data):
    i = data.draw(st.integers(1, k))
    lo = data.draw(st.integers(-40, 0))
    hi = data.draw(st.integers(max(1, lo + k), 20))
    spec = SequenceSpec(Family.KSOKL, k, i)
    table = dict(sequence_table(spec, lo, hi))
    # k consecutive extended values regenerate the rest going forward
    window = [table[lo + j] for j in range(k)]
    assert naive_forward(window, (1,) * k, hi - lo - k + 1)[-1] == table[hi]
    assert all(table[n] == kso_lucas(k, i, n) for n in (lo, hi))


@given(st.lists(st.integers(-4, 4), min_size=2, max_size=5).filter(lambda c: abs(c[-1]) == 1),
       st.integers(-25, 25))
def test_unit_last_coefficient_extends(c, n):
    k = len(c)
    spec = SequenceSpec(Family.KSOKF, k, 1, tuple(c))
    assert dict(sequence_table(spec, min(n, 1 - k), max(n, 0)))[n] == kso_fib(k, c, 1, n)


def test_extended_flag():
    spec = SequenceSpec(Family.KSOKL, 3, 1)
    assert spec.is_extended(-3) and not spec.is_extended(-2)
