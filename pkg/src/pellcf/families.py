"""Closed-form solutions for d in {k^2+4, k^2-4, k^2+1, k^2-1} (and k^2-k).

Each solvable case is described by a :class:`ClosedForm`: a Lucas parameter
pair (k', s) and an index map n -> step*n - offset, with

    x = V_idx(k', s) / x_div,   y = y_mul * U_idx(k', s) / y_div.

Unsolvable cases carry a short reason tag instead. :func:`crosscheck` compares
everything here against the generic solver and the brute-force oracle.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import islice

from . import pell
from .contfrac import SqrtCF, expand_sqrt
from .errors import OutOfRangeError, UnsolvableError
from .exact import exact_div
from .lucas import LucasParams, lucas_pair_fast, lucas_sequence
from .oracle import brute_solutions
from .pell import PellSolution


class Family(str, enum.Enum):
    K2P4 = "k2p4"
    K2M4 = "k2m4"
    K2P1 = "k2p1"
    K2M1 = "k2m1"
    K2MK = "k2mk"

    def d(self, k: int) -> int:
        return {
            Family.K2P4: k * k + 4,
            Family.K2M4: k * k - 4,
            Family.K2P1: k * k + 1,
            Family.K2M1: k * k - 1,
            Family.K2MK: k * k - k,
        }[self]

    @property
    def min_k(self) -> int:
        return {Family.K2P4: 2, Family.K2M4: 4, Family.K2P1: 1,
                Family.K2M1: 2, Family.K2MK: 3}[self]

    @property
    def label(self) -> str:
        return {Family.K2P4: "k^2+4", Family.K2M4: "k^2-4", Family.K2P1: "k^2+1",
                Family.K2M1: "k^2-1", Family.K2MK: "k^2-k"}[self]


@dataclass(frozen=True)
class FamilyCase:
    family: Family
    k: int
    N: int

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.N not in pell.ALLOWED_N:
            raise ValueError(f"N must be one of {pell.ALLOWED_N}")
        if self.k < self.family.min_k:
            raise OutOfRangeError(
                f"{self.family.value} needs k >= {self.family.min_k}, got k={self.k}")
        if self.family is Family.K2MK and self.N != -1:
            raise OutOfRangeError("k2mk only covers N = -1")

    @property
    def d(self) -> int:
        return self.family.d(self.k)

    @property
    def is_d5(self) -> bool:
        return self.family is Family.K2P1 and self.k == 2


def all_cases(k_max: int) -> list[FamilyCase]:
    """Every in-range case with k <= k_max, in a fixed order."""
    out = []
    for fam in Family:
        Ns = (-1,) if fam is Family.K2MK else pell.ALLOWED_N
        for k in range(fam.min_k, k_max + 1):
            out.extend(FamilyCase(fam, k, N) for N in Ns)
    return out


@dataclass(frozen=True)
class ClosedForm:
    params: LucasParams
    step: int
    offset: int = 0
    x_div: int = 1
    y_div: int = 1
    y_mul: int = 1

    def index(self, n: int) -> int:
        return self.step * n - self.offset

    def evaluate(self, n: int) -> PellSolution:
        pair = lucas_pair_fast(self.params, self.index(n))
        return PellSolution(exact_div(pair.V, self.x_div),
                            exact_div(self.y_mul * pair.U, self.y_div))

    def first(self, count: int) -> list[PellSolution]:
        top = self.index(count)
        seq = lucas_sequence(self.params, top + 1)
        out = []
        for n in range(1, count + 1):
            pair = seq[self.index(n)]
            out.append(PellSolution(exact_div(pair.V, self.x_div),
                                    exact_div(self.y_mul * pair.U, self.y_div)))
        return out

    def describe(self) -> str:
        k, s = self.params.k, self.params.s
        idx = f"{self.step}n" if self.step != 1 else "n"
        if self.offset:
            idx += f"-{self.offset}"
        x = f"V_{{{idx}}}({k},{s})" + (f"/{self.x_div}" if self.x_div != 1 else "")
        y = (f"{self.y_mul}*" if self.y_mul != 1 else "") + f"U_{{{idx}}}({k},{s})"
        y += f"/{self.y_div}" if self.y_div != 1 else ""
        return f"({x}, {y})"


GENERATOR = "generator"
NO_SOLUTION = "no-solution"
GENERIC = "generic"


@dataclass(frozen=True)
class FamilyAnswer:
    kind: str
    term: ClosedForm | None = None
    reason: str = ""
    notes: tuple[str, ...] = field(default=())


PERIOD_EVEN = "period length of sqrt(d) is even"


def _d5_answer(N: int) -> FamilyAnswer:
    fib = LucasParams(1, 1)
    term = {
        1: ClosedForm(fib, 6, 0, 2, 2),
        -1: ClosedForm(fib, 6, 3, 2, 2),
        4: ClosedForm(fib, 2, 0),
        -4: ClosedForm(fib, 2, 1),
    }[N]
    desc = term.describe().replace("(1,1)", "").replace("V_", "L_").replace("U_", "F_")
    return FamilyAnswer(GENERATOR, term, "d=5: " + desc)


def family_answer(case: FamilyCase) -> FamilyAnswer:
    fam, k, N = case.family, case.k, case.N
    odd = k % 2 == 1
    if case.is_d5:
        return _d5_answer(N)

    term = None
    if fam is Family.K2P4:
        p = LucasParams(k, 1)
        if N == 1:
            term = ClosedForm(p, 6 if odd else 2, 0, 2, 2)
        elif N == -1:
            if not odd:
                return FamilyAnswer(NO_SOLUTION, reason=PERIOD_EVEN + " (k even)")
            term = ClosedForm(p, 6, 3, 2, 2)
        elif N == 4:
            term = ClosedForm(p, 2, 0)
        else:
            term = ClosedForm(p, 2, 1)
    elif fam is Family.K2M4:
        p = LucasParams(k, -1)
        if N == 1:
            term = ClosedForm(p, 3 if odd else 2, 0, 2, 2)
        elif N == -1:
            return FamilyAnswer(NO_SOLUTION, reason=PERIOD_EVEN)
        elif N == 4:
            term = ClosedForm(p, 1, 0)
        elif odd:
            return FamilyAnswer(NO_SOLUTION, reason="d odd and x^2-dy^2=-1 unsolvable")
        else:
            return FamilyAnswer(
                NO_SOLUTION, reason="x even; reduces to x^2-((k/2)^2-1)y^2=-1")
    elif fam is Family.K2P1:
        p = LucasParams(2 * k, 1)
        term = {
            1: ClosedForm(p, 2, 0, 2, 1),
            -1: ClosedForm(p, 2, 1, 2, 1),
            4: ClosedForm(p, 2, 0, 1, 1, 2),
            -4: ClosedForm(p, 2, 1, 1, 1, 2),
        }[N]
    elif fam is Family.K2M1:
        p = LucasParams(2 * k, -1)
        if N == 1:
            term = ClosedForm(p, 1, 0, 2, 1)
        elif N == 4:
            term = ClosedForm(p, 1, 0, 1, 1, 2)
        elif N == -1:
            return FamilyAnswer(NO_SOLUTION, reason=PERIOD_EVEN)
        elif k == 3:
            return FamilyAnswer(
                GENERIC, reason="no closed form for d=8, N=-4; generic solver",
                notes=("k=3 excluded from the nonexistence result; (2,1) solves it",))
        elif k % 2 == 0:
            return FamilyAnswer(NO_SOLUTION, reason="d odd and x^2-dy^2=-1 unsolvable")
        else:
            return FamilyAnswer(
                NO_SOLUTION,
                reason="x even; reduces to x^2-(m^2-m)y^2=-1 with m=(k+1)/2")
    else:
        return FamilyAnswer(NO_SOLUTION, reason=PERIOD_EVEN)
    return FamilyAnswer(GENERATOR, term, term.describe())


def family_cf(family, k: int) -> SqrtCF:
    """Closed-form continued fraction of sqrt(d) for the family at k."""
    fam = Family(family)
    if k < fam.min_k:
        raise OutOfRangeError(f"{fam.value} needs k >= {fam.min_k}, got k={k}")
    d = fam.d(k)
    if fam is Family.K2P4:
        if k % 2 == 0:
            return SqrtCF(d, k, (k // 2, 2 * k))
        h = (k - 1) // 2
        return SqrtCF(d, k, (h, 1, 1, h, 2 * k))
    if fam is Family.K2M4:
        if k == 4:
            return SqrtCF(d, 3, (2, 6))
        if k % 2 == 1:
            h = (k - 3) // 2
            return SqrtCF(d, k - 1, (1, h, 2, h, 1, 2 * (k - 1)))
        return SqrtCF(d, k - 1, (1, (k - 4) // 2, 1, 2 * (k - 1)))
    if fam is Family.K2P1:
        return SqrtCF(d, k, (2 * k,))
    if fam is Family.K2M1:
        return SqrtCF(d, k - 1, (1, 2 * (k - 1)))
    return SqrtCF(d, k - 1, (2, 2 * (k - 1)))


def family_fundamental(case: FamilyCase) -> PellSolution | None:
    """Fundamental solution from its closed polynomial form in k."""
    fam, k, N = case.family, case.k, case.N
    if case.is_d5:
        return {1: PellSolution(9, 4), -1: PellSolution(2, 1),
                4: PellSolution(3, 1), -4: PellSolution(1, 1)}[N]
    ans = family_answer(case)
    if ans.kind == NO_SOLUTION:
        return None
    if ans.kind == GENERIC:
        return pell.fundamental(case.d, N)
    odd = k % 2 == 1
    if fam is Family.K2P4:
        if N == -1:
            return PellSolution((k**3 + 3 * k) // 2, (k * k + 1) // 2)
        if N == 1:
            if not odd:
                return PellSolution((k * k + 2) // 2, k // 2)
            x, y = (k**3 + 3 * k) // 2, (k * k + 1) // 2
            return PellSolution(x * x + case.d * y * y, 2 * x * y)
        if N == 4:
            return PellSolution(k * k + 2, k)
        return PellSolution(k, 1)
    if fam is Family.K2M4:
        if N == 1:
            if odd:
                return PellSolution((k**3 - 3 * k) // 2, (k * k - 1) // 2)
            return PellSolution((k * k - 2) // 2, k // 2)
        return PellSolution(k, 1)
    if fam is Family.K2P1:
        return {1: PellSolution(2 * k * k + 1, 2 * k), -1: PellSolution(k, 1),
                4: PellSolution(4 * k * k + 2, 4 * k), -4: PellSolution(2 * k, 2)}[N]
    # K2M1, N in (1, 4)
    return ans.term.evaluate(1)


def family_nonexistence(case: FamilyCase) -> str | None:
    ans = family_answer(case)
    return ans.reason if ans.kind == NO_SOLUTION else None


def family_solutions(case: FamilyCase, count: int) -> list[PellSolution]:
    """First ``count`` positive solutions from the closed form, ascending."""
    if count < 1:
        raise ValueError("count must be >= 1")
    ans = family_answer(case)
    if ans.kind == NO_SOLUTION:
        raise UnsolvableError(case.d, case.N, ans.reason)
    if ans.kind == GENERIC:
        return pell.solutions(case.d, case.N, count)
    sols = ans.term.first(count)
    for s in sols:
        assert pell.verify(case.d, case.N, s), (case, s)
    return sols


@dataclass
class CrosscheckReport:
    case: FamilyCase
    ok: bool = True
    checks: list[str] = field(default_factory=list)
    divergence: str | None = None

    def fail(self, msg: str):
        if self.ok:
            self.ok = False
            self.divergence = msg

    def __str__(self):
        c = self.case
        head = f"{c.family.value} k={c.k} N={c.N} d={c.d}"
        return f"{head}: {'pass' if self.ok else 'FAIL ' + str(self.divergence)}"


def crosscheck(case: FamilyCase, m: int = 5, y_max: int = 10_000) -> CrosscheckReport:
    """Compare the closed forms for ``case`` with the generic solver.

    Checks the CF pattern, the fundamental solution and the first ``m``
    solutions. Nonexistence claims are confirmed by the oracle up to ``y_max``.
    """
    rep = CrosscheckReport(case)
    d = case.d
    cf = family_cf(case.family, case.k)
    rep.checks.append("cf")
    if cf != expand_sqrt(d):
        rep.fail(f"cf pattern {cf} != expansion {expand_sqrt(d)}")
    fund = family_fundamental(case)
    gen_fund = pell.fundamental(d, case.N)
    rep.checks.append("fundamental")
    if fund != gen_fund:
        rep.fail(f"fundamental {fund} != generic {gen_fund}")
    ans = family_answer(case)
    if ans.kind == NO_SOLUTION:
        rep.checks.append("oracle")
        found = brute_solutions(d, case.N, y_max)
        if found:
            rep.fail(f"declared unsolvable but oracle found {found[0]}")
        return rep
    if gen_fund is None:
        return rep
    rep.checks.append("solutions")
    fam_sols = family_solutions(case, m)
    gen_sols = list(islice(pell.iter_solutions(d, case.N), m))
    for i, (a, b) in enumerate(zip(fam_sols, gen_sols), start=1):
        if a != b:
            rep.fail(f"solution {i}: closed form {a} != generic {b}")
            break
    return rep
