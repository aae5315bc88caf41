"""Exact integer primitives and the quadratic-surd state (P + sqrt(d)) / Q.

Nothing here touches floating point. The continued-fraction engine in
:mod:`pellcf.contfrac` is built on :func:`surd_step`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import PerfectSquareError


def isqrt(n: int) -> tuple[int, bool]:
    """Return ``(floor(sqrt(n)), is_perfect_square)``."""
    if n < 0:
        raise ValueError(f"isqrt of negative number {n}")
    root = math.isqrt(n)
    return root, root * root == n


def is_square(n: int) -> bool:
    return n >= 0 and isqrt(n)[1]


def check_nonsquare(d: int) -> int:
    """Validate ``d`` as a Pell discriminant; returns ``floor(sqrt(d))``."""
    if d < 2:
        raise PerfectSquareError(d)
    root, exact = isqrt(d)
    if exact:
        raise PerfectSquareError(d)
    return root


@dataclass(frozen=True)
class QuadraticSurd:
    """The number (P + sqrt(d)) / Q with Q | d - P^2."""

    P: int
    Q: int
    d: int

    def __post_init__(self):
        check_nonsquare(self.d)
        if self.Q == 0:
            raise ValueError("Q must be nonzero")
        if (self.d - self.P * self.P) % self.Q:
            raise ValueError(f"Q={self.Q} does not divide d - P^2 for {self}")

    @classmethod
    def sqrt(cls, d: int) -> QuadraticSurd:
        return cls(0, 1, d)

    def floor(self, root: int | None = None) -> int:
        if root is None:
            root = check_nonsquare(self.d)
        # sqrt(d) is irrational, so floor((P+sqrt d)/m) == (P+root)//m for m > 0
        if self.Q > 0:
            return (self.P + root) // self.Q
        return -((self.P + root) // -self.Q) - 1


def _step(P: int, Q: int, d: int, root: int) -> tuple[int, int, int]:
    if Q > 0:
        a = (P + root) // Q
    else:
        a = -((P + root) // -Q) - 1
    P1 = a * Q - P
    num = d - P1 * P1
    assert num % Q == 0, (P, Q, d)
    return a, P1, num // Q


def surd_step(alpha: QuadraticSurd) -> tuple[int, QuadraticSurd]:
    """One continued-fraction step: ``a = floor(alpha)``, ``next = 1/(alpha - a)``."""
    root = check_nonsquare(alpha.d)
    a, P, Q = _step(alpha.P, alpha.Q, alpha.d, root)
    return a, QuadraticSurd(P, Q, alpha.d)


def qmul(u: tuple[int, int], v: tuple[int, int], d: int) -> tuple[int, int]:
    """Multiply x1 + y1*sqrt(d) by x2 + y2*sqrt(d)."""
    return u[0] * v[0] + d * u[1] * v[1], u[0] * v[1] + u[1] * v[0]


def qpow(u: tuple[int, int], e: int, d: int) -> tuple[int, int]:
    """Binary powering in Z[sqrt(d)]."""
    if e < 0:
        raise ValueError("negative exponent")
    result = (1, 0)
    base = u
    while e:
        if e & 1:
            result = qmul(result, base, d)
        e >>= 1
        if e:
            base = qmul(base, base, d)
    return result


def exact_div(n: int, m: int) -> int:
    q, r = divmod(n, m)
    if r:
        raise ArithmeticError(f"{n} is not divisible by {m}")
    return q
