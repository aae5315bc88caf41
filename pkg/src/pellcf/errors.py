"""Exception types shared across the package."""


class PellError(Exception):
    pass


class PerfectSquareError(PellError, ValueError):
    def __init__(self, d):
        super().__init__(f"d={d} is a perfect square (or below 2)")
        self.d = d


class UnsolvableError(PellError, ValueError):
    """Raised when solutions are requested for an equation that has none."""

    def __init__(self, d, N, reason):
        super().__init__(f"x^2 - {d}y^2 = {N} is unsolvable ({reason})")
        self.d = d
        self.N = N
        self.reason = reason


class OutOfRangeError(PellError, ValueError):
    pass


class InternalBoundExceeded(PellError, RuntimeError):
    pass
