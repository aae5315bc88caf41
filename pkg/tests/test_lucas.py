import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pellcf.lucas import (LucasParams, fibonacci, lucas_number, lucas_pair,
                          lucas_pair_fast, lucas_sequence, lucas_u, lucas_v,
                          u_is_even, v_is_even)


def unroll(k, s, a, b, n):
    for _ in range(n):
        a, b = b, k * b + s * a
    return a


@pytest.mark.parametrize("k, s, n, want", [(1, 1, 0, 0), (1, 1, 6, 8), (3, 1, 6, 360)])
def test_u_examples(k, s, n, want):
    assert lucas_u((k, s), n) == want


@pytest.mark.parametrize("k, s, n, want", [(5, -1, 0, 2), (3, 1, 6, 1298), (2, 1, 2, 6)])
def test_v_examples(k, s, n, want):
    assert lucas_v((k, s), n) == want


@pytest.mark.parametrize("k, s", [(0, 1), (1, 0), (1, -1), (2, -1)])
def test_params_validation(k, s):
    with pytest.raises(ValueError):
        LucasParams(k, s)


def test_parity_examples():
    p = LucasParams(2, 1)
    assert all(lucas_v(p, n) % 2 == 0 and v_is_even(p, n) for n in range(51))
    assert lucas_u((3, 1), 3) == 10 and u_is_even((3, 1), 3)
    assert lucas_u((3, 1), 4) == 33 and not u_is_even((3, 1), 4)
    assert lucas_u(p, 5) % 2 == 1 and not u_is_even(p, 5)


def test_parity_needs_unit_s():
    with pytest.raises(ValueError):
        u_is_even((3, 2), 4)


def valid_params():
    for k in range(-50, 51):
        for s in (1, -1):
            if k and k * k + 4 * s > 0:
                yield LucasParams(k, s)


def test_recurrence_and_norm_identity():
    for p in valid_params():
        seq = lucas_sequence(p, 101)
        for n in range(2, 101):
            assert seq[n].U == p.k * seq[n - 1].U + p.s * seq[n - 2].U
            assert seq[n].V == p.k * seq[n - 1].V + p.s * seq[n - 2].V
        for pair in seq:
            assert pair.V**2 - p.discriminant * pair.U**2 == 4 * (-p.s) ** pair.n


def test_parity_laws_against_values():
    for p in valid_params():
        for pair in lucas_sequence(p, 121):
            assert (pair.U % 2 == 0) == u_is_even(p, pair.n)
            assert (pair.V % 2 == 0) == v_is_even(p, pair.n)


def test_fibonacci_lucas_specialization():
    F = [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144]
    L = [2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123, 199, 322]
    assert [fibonacci(n) for n in range(13)] == F
    assert [lucas_number(n) for n in range(13)] == L


@given(st.integers(-60, 60), st.sampled_from([1, -1, 2, -3, 5]), st.integers(0, 400))
def test_fast_doubling_matches_iteration(k, s, n):
    if k == 0 or k * k + 4 * s <= 0:
        return
    assert lucas_pair_fast((k, s), n) == lucas_pair((k, s), n)


def test_pair_matches_independent_unroll():
    for k, s in [(1, 1), (3, 1), (6, -1), (-4, 1), (7, -1)]:
        for n in range(30):
            assert lucas_u((k, s), n) == unroll(k, s, 0, 1, n)
            assert lucas_v((k, s), n) == unroll(k, s, 2, k, n)


@pytest.mark.parametrize("k, s", [(1, 1), (3, 1), (4, 1), (3, -1), (6, -1)])
def test_binet_interval(k, s):
    iv = mpmath.iv
    iv.dps = 50
    root = iv.sqrt(iv.mpf(k * k + 4 * s))
    alpha, beta = (k + root) / 2, (k - root) / 2
    for n in range(25):
        u_iv = (alpha**n - beta**n) / (alpha - beta)
        v_iv = alpha**n + beta**n
        pair = lucas_pair((k, s), n)
        assert pair.U in u_iv and pair.V in v_iv
        assert u_iv.delta < 1e-20
