"""Exact Pell-equation solving for x^2 - d y^2 = N, N in {1, -1, 4, -4}."""
from .contfrac import Convergent, SqrtCF, convergent, convergents, expand_sqrt, period_length
from .errors import (InternalBoundExceeded, OutOfRangeError, PellError,
                     PerfectSquareError, UnsolvableError)
from .exact import QuadraticSurd, isqrt, surd_step
from .families import (Family, FamilyCase, crosscheck, family_answer, family_cf,
                       family_fundamental, family_nonexistence, family_solutions)
from .lucas import LucasPair, LucasParams, lucas_pair, lucas_u, lucas_v
from .oracle import brute_solutions
from .pell import (PellProblem, PellSolution, fundamental, is_negative_one_solvable,
                   solutions, verify)

__version__ = "0.1.0"
