"""Generalized Fibonacci U_n(k, s) and Lucas V_n(k, s) sequences.

Both satisfy W_{n+1} = k W_n + s W_{n-1}, with seeds U = (0, 1) and
V = (2, k). Every pair obeys V_n^2 - (k^2 + 4s) U_n^2 = 4 (-s)^n, which is
how (V, U) pairs become solutions of x^2 - d y^2 = +-4.
"""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class LucasParams:
    k: int
    s: int

    def __post_init__(self):
        if self.k == 0 or self.s == 0:
            raise ValueError("k and s must be nonzero")
        if self.discriminant <= 0:
            raise ValueError(f"k^2 + 4s must be positive, got {self.discriminant}")

    @property
    def discriminant(self) -> int:
        return self.k * self.k + 4 * self.s


@dataclass(frozen=True)
class LucasPair:
    n: int
    U: int
    V: int


def _as_params(params) -> LucasParams:
    if isinstance(params, LucasParams):
        return params
    return LucasParams(*params)


def lucas_pair(params, n: int) -> LucasPair:
    """(U_n, V_n) by the bottom-up recurrence; O(n) big-int operations."""
    p = _as_params(params)
    if n < 0:
        raise ValueError("index must be nonnegative")
    k, s = p.k, p.s
    u0, u1 = 0, 1
    v0, v1 = 2, k
    for _ in range(n):
        u0, u1 = u1, k * u1 + s * u0
        v0, v1 = v1, k * v1 + s * v0
    return LucasPair(n, u0, v0)


def lucas_u(params, n: int) -> int:
    return lucas_pair(params, n).U


def lucas_v(params, n: int) -> int:
    return lucas_pair(params, n).V


def lucas_pair_fast(params, n: int) -> LucasPair:
    """Same values as :func:`lucas_pair` via fast doubling, O(log n) steps.

    Uses U_2m = U_m V_m, V_2m = V_m^2 - 2(-s)^m and the shift
    U_{m+1} = (k U_m + V_m)/2, V_{m+1} = (D U_m + k V_m)/2 with D = k^2+4s.
    """
    p = _as_params(params)
    if n < 0:
        raise ValueError("index must be nonnegative")
    k, D, q = p.k, p.discriminant, -p.s
    u, v, qm = 0, 2, 1  # U_m, V_m, q^m with m = 0
    for bit in bin(n)[2:]:
        u, v, qm = u * v, v * v - 2 * qm, qm * qm
        if bit == "1":
            u, v = (k * u + v) >> 1, (D * u + k * v) >> 1
            qm *= q
    return LucasPair(n, u, v)


def lucas_sequence(params, count: int) -> list[LucasPair]:
    """The first ``count`` pairs (n = 0 .. count-1)."""
    p = _as_params(params)
    out = []
    u0, u1, v0, v1 = 0, 1, 2, p.k
    for n in range(count):
        out.append(LucasPair(n, u0, v0))
        u0, u1 = u1, p.k * u1 + p.s * u0
        v0, v1 = v1, p.k * v1 + p.s * v0
    return out


def fibonacci(n: int) -> int:
    return lucas_u((1, 1), n)


def lucas_number(n: int) -> int:
    return lucas_v((1, 1), n)


def _check_unit_s(p: LucasParams):
    if p.s not in (1, -1):
        raise ValueError("parity laws are stated for s = +-1 only")


def u_is_even(params, n: int) -> bool:
    """Parity of U_n(k, +-1) from the closed law, without computing U_n."""
    p = _as_params(params)
    _check_unit_s(p)
    if p.k % 2 == 0:
        return n % 2 == 0
    return n % 3 == 0


def v_is_even(params, n: int) -> bool:
    p = _as_params(params)
    _check_unit_s(p)
    if p.k % 2 == 0:
        return True
    return n % 3 == 0
