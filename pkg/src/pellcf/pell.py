"""Solver for x^2 - d y^2 = N with N in {1, -1, 4, -4}.

Fundamental solutions come from the convergents of sqrt(d): for N = +-1
at index l-1 or 2l-1, where l is the period length. All further positive
solutions are produced by a first-order recurrence from the fundamental
one, halving exactly for N = +-4.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import islice
from typing import Iterator, NamedTuple

from .contfrac import convergent, convergents, expand_sqrt
from .errors import InternalBoundExceeded, UnsolvableError
from .exact import check_nonsquare, exact_div, isqrt, qmul, qpow

ALLOWED_N = (1, -1, 4, -4)

# Above this d, |N| = 4 < sqrt(d) and every coprime solution of x^2 - dy^2 = +-4
# is a convergent of sqrt(d).
_CONVERGENT_SCAN_MIN_D = 17


class PellSolution(NamedTuple):
    x: int
    y: int


@dataclass(frozen=True)
class PellProblem:
    d: int
    N: int

    def __post_init__(self):
        check_nonsquare(self.d)
        if self.N not in ALLOWED_N:
            raise ValueError(f"N must be one of {ALLOWED_N}, got {self.N}")


def _problem(d, N=None) -> PellProblem:
    if isinstance(d, PellProblem):
        return d
    return PellProblem(d, N)


def verify(d: int, N: int, sol) -> bool:
    x, y = sol
    return x * x - d * y * y == N


def is_negative_one_solvable(d: int) -> bool:
    return expand_sqrt(d).l % 2 == 1


def _fundamental_unit(d: int, N: int) -> PellSolution | None:
    cf = expand_sqrt(d)
    l = cf.l
    if N == -1:
        if l % 2 == 0:
            return None
        c = convergent(cf, l - 1)
    else:
        c = convergent(cf, l - 1 if l % 2 == 0 else 2 * l - 1)
    sol = PellSolution(c.p, c.q)
    if not verify(d, N, sol):
        raise InternalBoundExceeded(f"convergent {c} does not solve x^2-{d}y^2={N}")
    return sol


def _search_four(d: int, N: int) -> PellSolution | None:
    # Scaling an N/4 solution by 2 solves N, so the bound 2*y1 is sound.
    unit = _fundamental_unit(d, N // 4) or _fundamental_unit(d, 1)
    for y in range(1, 2 * unit.y + 1):
        t = d * y * y + N
        if t > 0:
            x, exact = isqrt(t)
            if exact:
                return PellSolution(x, y)
    if N == 4:
        raise InternalBoundExceeded(f"no solution of x^2-{d}y^2=4 below y={2 * unit.y}")
    return None


def _scan_four(d: int, N: int) -> PellSolution | None:
    # p_n^2 - d q_n^2 is periodic in n with period dividing 2l, so one double
    # period covers every coprime solution and the +-1 fundamentals.
    cf = expand_sqrt(d)
    primitive = doubled = None
    for c in islice(convergents(cf), 2 * cf.l):
        norm = c.p * c.p - d * c.q * c.q
        if primitive is None and norm == N:
            primitive = PellSolution(c.p, c.q)
        if doubled is None and 4 * norm == N:
            doubled = PellSolution(2 * c.p, 2 * c.q)
    found = [s for s in (primitive, doubled) if s is not None]
    if not found:
        if N == 4:
            raise InternalBoundExceeded(f"convergent scan missed x^2-{d}y^2=4")
        return None
    return min(found, key=lambda s: s.y)


def fundamental(d, N=None) -> PellSolution | None:
    """Smallest positive solution, or None if the equation has no solution.

    >>> fundamental(13, -1)
    PellSolution(x=18, y=5)
    """
    pb = _problem(d, N)
    if pb.N in (1, -1):
        return _fundamental_unit(pb.d, pb.N)
    if pb.d < _CONVERGENT_SCAN_MIN_D:
        return _search_four(pb.d, pb.N)
    return _scan_four(pb.d, pb.N)


def minimality_certificate(d, N=None, sol=None) -> str:
    """Name the argument that makes ``fundamental(d, N)`` minimal.

    ``"lemma"`` when N = 4 and a > b^2 - 2; ``"exhaustive"`` when every
    smaller y was checked directly (small b); otherwise ``"continued-fraction"``.
    """
    pb = _problem(d, N)
    if sol is None:
        sol = fundamental(pb)
    if sol is None:
        raise UnsolvableError(pb.d, pb.N, unsolvable_reason(pb))
    a, b = sol
    if pb.N == 4 and a > b * b - 2:
        return "lemma"
    if b <= 100_000:
        for y in range(1, b):
            t = pb.d * y * y + pb.N
            if t > 0 and isqrt(t)[1]:
                raise AssertionError(f"smaller solution at y={y} for {pb}")
        return "exhaustive"
    return "continued-fraction"


def unsolvable_reason(d, N=None) -> str | None:
    """Why x^2 - dy^2 = N has no positive solution, or None if it has one."""
    pb = _problem(d, N)
    if fundamental(pb) is not None:
        return None
    if pb.N == -1:
        return "period length even"
    if pb.d < _CONVERGENT_SCAN_MIN_D:
        return "no solution below the search bound 2*y1"
    return "no convergent in two periods has norm -4 and x^2-dy^2=-1 is unsolvable"


def _advance(d: int, N: int, first: PellSolution) -> Iterator[PellSolution]:
    x1, y1 = first
    x, y = first
    if N == 1:
        while True:
            yield PellSolution(x, y)
            x, y = x1 * x + d * y1 * y, x1 * y + y1 * x
    elif N == -1:
        ux, uy = qmul(first, first, d)
        while True:
            yield PellSolution(x, y)
            x, y = ux * x + d * uy * y, ux * y + uy * x
    elif N == 4:
        while True:
            yield PellSolution(x, y)
            x, y = exact_div(x1 * x + d * y1 * y, 2), exact_div(x1 * y + y1 * x, 2)
    else:
        while True:
            yield PellSolution(x, y)
            for _ in range(2):
                x, y = exact_div(x1 * x + d * y1 * y, 2), exact_div(x1 * y + y1 * x, 2)


def iter_solutions(d, N=None) -> Iterator[PellSolution]:
    """All positive solutions in increasing order (an endless iterator)."""
    pb = _problem(d, N)
    first = fundamental(pb)
    if first is None:
        raise UnsolvableError(pb.d, pb.N, unsolvable_reason(pb))
    return _advance(pb.d, pb.N, first)


def solutions(d, N=None, count: int = 1) -> list[PellSolution]:
    if count < 1:
        raise ValueError("count must be >= 1")
    return list(islice(iter_solutions(d, N), count))


def solutions_up_to(d, N=None, y_max: int = 10_000) -> list[PellSolution]:
    """Every positive solution with y <= y_max ([] if unsolvable)."""
    pb = _problem(d, N)
    if fundamental(pb) is None:
        return []
    out = []
    for sol in iter_solutions(pb):
        if sol.y > y_max:
            break
        out.append(sol)
    return out


def power_solutions(d, N=None, count: int = 1) -> list[PellSolution]:
    """Same list as :func:`solutions`, computed by binary powering each term."""
    pb = _problem(d, N)
    first = fundamental(pb)
    if first is None:
        raise UnsolvableError(pb.d, pb.N, unsolvable_reason(pb))
    out = []
    for n in range(1, count + 1):
        if pb.N == 1:
            x, y = qpow(first, n, pb.d)
        elif pb.N == -1:
            x, y = qpow(first, 2 * n - 1, pb.d)
        elif pb.N == 4:
            x, y = qpow(first, n, pb.d)
            x, y = exact_div(x, 2 ** (n - 1)), exact_div(y, 2 ** (n - 1))
        else:
            x, y = qpow(first, 2 * n - 1, pb.d)
            x, y = exact_div(x, 4 ** (n - 1)), exact_div(y, 4 ** (n - 1))
        out.append(PellSolution(x, y))
    return out
