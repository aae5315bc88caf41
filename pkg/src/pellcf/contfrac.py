"""Periodic continued fraction of sqrt(d) and its convergents."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .exact import _step, check_nonsquare


@dataclass(frozen=True)
class SqrtCF:
    """sqrt(d) = [a0; period, period, ...]; the period ends in 2*a0."""

    d: int
    a0: int
    period: tuple[int, ...]

    def __post_init__(self):
        if not self.period:
            raise ValueError("empty period")
        if self.period[-1] != 2 * self.a0:
            raise ValueError(f"period of sqrt({self.d}) must end in 2*a0")

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.period)

    def quotient(self, j: int) -> int:
        if j == 0:
            return self.a0
        return self.period[(j - 1) % self.l]

    def quotients(self) -> Iterator[int]:
        yield self.a0
        while True:
            yield from self.period

    def __str__(self):
        return f"[{self.a0}; {', '.join(map(str, self.period))}]"


@dataclass(frozen=True)
class Convergent:
    n: int
    p: int
    q: int


@lru_cache(maxsize=4096)
def expand_sqrt(d: int) -> SqrtCF:
    """Expand sqrt(d) exactly, detecting the period by recurrence of (P, Q).

    >>> expand_sqrt(21).period
    (1, 1, 2, 1, 1, 8)
    """
    root = check_nonsquare(d)
    a0, P, Q = _step(0, 1, d, root)
    first = (P, Q)
    period = []
    while True:
        a, P, Q = _step(P, Q, d, root)
        period.append(a)
        if (P, Q) == first:
            break
    cf = SqrtCF(d, a0, tuple(period))
    assert cf.period[:-1] == cf.period[-2::-1], cf
    return cf


def period_length(d: int) -> int:
    return expand_sqrt(d).l


def convergents(cf: SqrtCF) -> Iterator[Convergent]:
    """Endless stream of convergents p_n/q_n, n = 0, 1, 2, ..."""
    p_prev, q_prev = 1, 0
    p, q = cf.a0, 1
    yield Convergent(0, p, q)
    n = 0
    for a in _tail(cf):
        n += 1
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        yield Convergent(n, p, q)


def _tail(cf: SqrtCF) -> Iterator[int]:
    while True:
        yield from cf.period


def convergent(cf: SqrtCF, n: int) -> Convergent:
    if n < 0:
        raise ValueError("convergent index must be >= 0")
    for c in convergents(cf):
        if c.n == n:
            return c
    raise AssertionError("unreachable")
