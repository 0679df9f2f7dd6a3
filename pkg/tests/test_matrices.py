import pytest
from hypothesis import given, strategies as st

from kbonacci.errors import DimensionMismatch, IndexOutOfDomain, NonInvertibleRecurrence
from kbonacci.identities import trace_coefficients
from kbonacci.matrices import (ExactMatrix, a_infty_window, companion, companion_bottom,
                               companion_inverse, d_infty_window, derivative_vector, f_tilde,
                               hook_power_row, hook_schur, l_tilde, l_tilde_0, mat_power,
                               mat_power_naive, orbit_step)
from kbonacci.polynomials import lucas_poly
from kbonacci.sequences import kso_fib, kso_lucas

I2 = [[1, 0], [0, 1]]


def test_companion_examples():
    assert companion(2, (1, 1)).tolist() == [[1, 1], [1, 0]]
    assert companion(3).tolist() == [[1, 1, 1], [1, 0, 0], [0, 1, 0]]
    assert companion(2, (2, 1)).tolist() == [[2, 1], [1, 0]]
    assert companion_bottom(3, (1, 2, 3)).tolist() == [[0, 1, 0], [0, 0, 1], [3, 2, 1]]


def test_power_examples():
    a = companion(2)
    assert mat_power(a, 0).tolist() == I2
    assert mat_power(a, 5).tolist() == [[8, 5], [5, 3]]
    assert mat_power(companion(3), 1) == companion(3)
    with pytest.raises(DimensionMismatch):
        mat_power(ExactMatrix.from_rows([[1, 2]]), 2)
    with pytest.raises(IndexOutOfDomain):
        mat_power(a, -1)


def test_f_tilde_examples():
    assert f_tilde(2, None, 1).tolist() == [[1, 1], [1, 0]]
    assert f_tilde(2, None, 0).tolist() == I2
    assert f_tilde(3, None, 2) == mat_power(companion(3), 2)


def test_l_tilde_examples():
    assert l_tilde_0(2).tolist() == [[-1, 2], [3, -1]]
    assert l_tilde_0(3).tolist() == [[-1, -2, 3], [-1, 4, -1], [5, 0, -1]]
    assert l_tilde_0(4).tolist()[0] == [-1, -2, -3, 4]
    assert l_tilde(2, 0) == l_tilde_0(2)
    m = l_tilde(2, 3)
    assert (m[0, 1], m[1, 1]) == (4, 3)


def test_windows():
    d = d_infty_window(4, None, -3, 0).as_matrix().tolist()
    assert d == [[7, 1, 0, -1], [-1, 6, 0, -1], [-1, -2, 5, -1], [-1, -2, -3, 4]]
    assert derivative_vector(2) == (-1, 2)
    assert d_infty_window(2, None, 1, 1).row(1) == (2, 1)
    a = a_infty_window(3, None, -2, 1).as_matrix().tolist()
    assert a[:3] == [[1, 0, 0], [0, 1, 0], [0, 0, 1]] and a[3] == [1, 1, 1]
    assert a_infty_window(2, None, 1, 2).as_matrix().tolist() == [[1, 1], [1, 2]]
    with pytest.raises(NonInvertibleRecurrence):
        d_infty_window(3, (1, 1, 0), -5, 0)


def test_hook_schur_examples():
    t = (1, 1, 1)
    assert hook_schur(t, 1, 0) == 1
    assert hook_schur(t, 4, 0) == kso_fib(3, None, 1, 4)
    assert hook_schur(t, 3, 2) == 1
    with pytest.raises(IndexOutOfDomain):
        hook_schur(t, 1, 2)


@pytest.mark.parametrize("k", range(2, 6))
def test_lucas_matrix_lemmas(k):
    a = companion(k)
    l0 = l_tilde_0(k)
    for n in range(31):
        assert l_tilde(k, n) == f_tilde(k, None, n) @ l0
        assert l_tilde(k, n + 1) == mat_power(a, n + 1) @ l0
        lt = l_tilde(k, n)
        assert all(lt[r, i - 1] == kso_lucas(k, i, n - r) for r in range(k) for i in range(1, k + 1))


@pytest.mark.parametrize("k", range(2, 5))
@pytest.mark.parametrize("which", range(3))
def test_trace_is_lucas_polynomial(k, which):
    t = trace_coefficients(k, which)
    a = companion_bottom(k, t)
    for n in range(16):
        assert mat_power(a, n).trace() == lucas_poly(k, n).evaluate(t)


@given(st.integers(2, 5), st.integers(0, 20), st.data())
def test_power_by_squaring_matches_naive(k, n, data):
    c = data.draw(st.lists(st.integers(-3, 3), min_size=k, max_size=k))
    m = companion(k, c)
    assert mat_power(m, n) == mat_power_naive(m, n)


@given(st.integers(2, 5), st.data())
def test_companion_inverse(k, data):
    c = data.draw(st.lists(st.integers(-3, 3), min_size=k - 1, max_size=k - 1))
    c.append(data.draw(st.sampled_from([1, -1])))
    assert companion(k, c) @ companion_inverse(k, c) == ExactMatrix.identity(k)


@given(st.integers(2, 5), st.integers(-8, 0), st.integers(0, 10), st.data())
def test_window_rows_follow_orbit(k, lo, span, data):
    t = data.draw(st.lists(st.integers(-2, 2), min_size=k - 1, max_size=k - 1)) + [1]
    for fn in (a_infty_window, d_infty_window):
        w = fn(k, t, lo, lo + span)
        for n in range(lo, lo + span):
            assert orbit_step(t, w.row(n)) == w.row(n + 1)
            v = ExactMatrix.from_rows([w.row(n)]) @ companion_bottom(k, t)
            assert v.rows[0] == w.row(n + 1)


@pytest.mark.parametrize("k", [3, 4])
def test_hook_schur_power_rows(k):
    # sign convention of the A_(k)^n display, checked for general t
    for t in [(1,) * k, tuple(range(1, k + 1)), (2, -1, 3, 1)[:k]]:
        a = companion_bottom(k, t)
        for n in range(1, 12):
            assert mat_power(a, n).rows[-1] == hook_power_row(t, n)


@pytest.mark.parametrize("k", range(2, 5))
def test_right_columns_carry_polynomials(k):
    t = tuple(range(1, k + 1))
    d = d_infty_window(k, t, 0, 12)
    assert d.right_column() == [lucas_poly(k, n).evaluate(t) for n in range(13)]
    ones = (1,) * k
    d1 = d_infty_window(k, None, 1 - k, 10)
    assert all(d1.row(n) == tuple(kso_lucas(k, i, n) for i in range(1, k + 1))
               for n in range(1 - k, 11))
    a = a_infty_window(k, ones, 1, 12)
    assert a.right_column() == [kso_fib(k, None, k, n + 1) for n in range(1, 13)]
