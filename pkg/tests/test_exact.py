import math

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pellcf.errors import PerfectSquareError
from pellcf.exact import QuadraticSurd, isqrt, qmul, qpow, surd_step


def test_isqrt_examples():
    assert isqrt(0) == (0, True)
    assert isqrt(13) == (3, False)
    assert isqrt(10**40) == (10**20, True)


@given(st.integers(min_value=0, max_value=10**80))
def test_isqrt_brackets(n):
    r, exact = isqrt(n)
    assert r * r <= n < (r + 1) ** 2
    assert exact == (r * r == n)


def test_isqrt_negative():
    with pytest.raises(ValueError):
        isqrt(-1)


def _oracle_floor(P, Q, d):
    with mpmath.workdps(60):
        return int(mpmath.floor((P + mpmath.sqrt(d)) / Q))


@pytest.mark.parametrize("state, a, nxt", [
    ((0, 1, 5), 2, (2, 1, 5)),
    ((2, 1, 5), 4, (2, 1, 5)),
    ((0, 1, 8), 2, (2, 4, 8)),
])
def test_surd_step_examples(state, a, nxt):
    got_a, got_next = surd_step(QuadraticSurd(*state))
    assert got_a == a == _oracle_floor(*state)
    assert got_next == QuadraticSurd(*nxt)


def test_surd_rejects_square_and_bad_state():
    with pytest.raises(PerfectSquareError):
        QuadraticSurd(0, 1, 16)
    with pytest.raises(ValueError):
        QuadraticSurd(1, 3, 5)  # 3 does not divide 5 - 1
    with pytest.raises(ValueError):
        QuadraticSurd(0, 0, 5)


@given(st.integers(2, 10**6))
def test_surd_iteration_keeps_invariant(d):
    if math.isqrt(d) ** 2 == d:
        return
    alpha = QuadraticSurd.sqrt(d)
    for _ in range(40):
        a, nxt = surd_step(alpha)
        assert (d - nxt.P**2) % nxt.Q == 0
        assert nxt.Q > 0 and a >= 1
        assert surd_step(alpha) == (a, nxt)
        alpha = nxt


@given(st.integers(-50, 50), st.integers(-20, 20).filter(bool))
def test_floor_negative_denominator(P, Q):
    d = 7
    if (d - P * P) % Q:
        return
    assert QuadraticSurd(P, Q, d).floor() == _oracle_floor(P, Q, d)


@given(st.integers(0, 50), st.integers(0, 50), st.integers(0, 30))
def test_qpow_matches_repeated_multiplication(x, y, e):
    d = 11
    acc = (1, 0)
    for _ in range(e):
        acc = qmul(acc, (x, y), d)
    assert qpow((x, y), e, d) == acc
