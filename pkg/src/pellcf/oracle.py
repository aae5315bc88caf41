"""Exhaustive search for positive solutions of x^2 - d y^2 = N.

Deliberately independent of the continued-fraction code: for each y it only
asks whether d*y^2 + N is a positive perfect square.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import isqrt

from .exact import check_nonsquare
from .pell import ALLOWED_N, PellSolution


@dataclass(frozen=True)
class OracleQuery:
    d: int
    N: int
    y_max: int

    def __post_init__(self):
        check_nonsquare(self.d)
        if self.N not in ALLOWED_N:
            raise ValueError(f"N must be one of {ALLOWED_N}")
        if self.y_max < 1:
            raise ValueError("y_max must be >= 1")


def _scan(d: int, N: int, lo: int, hi: int) -> list[PellSolution]:
    out = []
    t = d * lo * lo + N
    step = d * (2 * lo + 1)
    two_d = 2 * d
    for y in range(lo, hi + 1):
        # t == d*y^2 + N, updated incrementally
        if t > 0:
            x = isqrt(t)
            if x * x == t:
                out.append(PellSolution(x, y))
        t += step
        step += two_d
    return out


def brute_solutions(d: int, N: int, y_max: int, workers: int = 1,
                    chunk: int = 50_000) -> list[PellSolution]:
    """All positive (x, y) with y <= y_max, ascending in y.

    With ``workers > 1`` the y-range is split into chunks scanned in separate
    processes; the merged output is identical to the sequential scan.
    """
    q = OracleQuery(d, N, y_max)
    if workers <= 1 or y_max <= chunk:
        return _scan(q.d, q.N, 1, q.y_max)
    bounds = [(lo, min(lo + chunk - 1, y_max)) for lo in range(1, y_max + 1, chunk)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_scan, *zip(*[(d, N, lo, hi) for lo, hi in bounds]))
        return [s for part in parts for s in part]
