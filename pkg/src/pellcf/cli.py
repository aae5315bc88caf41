"""Command-line front end: ``pellcf cf | solve | family | verify``.

Exit codes: 0 ok, 1 verification failure, 2 invalid d / out-of-range k,
3 unsolvable as requested, 64 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import pell
from .contfrac import expand_sqrt
from .exact import is_square
from .errors import OutOfRangeError, PerfectSquareError, UnsolvableError
from .families import (GENERIC, NO_SOLUTION, Family, FamilyCase, all_cases,
                       crosscheck, family_answer, family_cf, family_solutions)
from .oracle import brute_solutions

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INVALID_D = 2
EXIT_UNSOLVABLE = 3
EXIT_USAGE = 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _sol(s) -> dict:
    return {"x": str(s[0]), "y": str(s[1])}


def _group(n: int) -> str:
    return f"{n:,}".replace(",", "_") if abs(n) >= 10**6 else str(n)


class Output:
    def __init__(self, fmt: str, command: dict):
        self.fmt = fmt
        self.command = command

    def emit(self, status: str, payload: dict, lines: list[str]):
        if self.fmt == "json":
            rec = {"schema_version": SCHEMA_VERSION, "command": self.command,
                   "status": status, "payload": payload}
            print(json.dumps(rec, indent=2))
        else:
            for line in lines:
                print(line)


def cmd_cf(args, out: Output) -> int:
    cf = expand_sqrt(args.d)
    payload = {"d": str(cf.d), "a0": str(cf.a0),
               "period": [str(a) for a in cf.period], "l": str(cf.l)}
    out.emit("ok", payload, [f"a0={cf.a0} period=[{','.join(map(str, cf.period))}] l={cf.l}"])
    return EXIT_OK


def _solutions_payload(d, N, sols, certificate=None):
    payload = {"d": str(d), "N": str(N), "solutions": [_sol(s) for s in sols]}
    if certificate:
        payload["minimality"] = certificate
    return payload


def _unsolvable(out: Output, d: int, N: int, reason: str) -> int:
    print(f"x^2 - {d}y^2 = {N}: unsolvable ({reason})", file=sys.stderr)
    out.emit("unsolvable", {"d": str(d), "N": str(N), "reason": reason},
             [f"unsolvable ({reason})"])
    return EXIT_UNSOLVABLE


def cmd_solve(args, out: Output) -> int:
    d, N = args.d, args.N
    pb = pell.PellProblem(d, N)
    reason = pell.unsolvable_reason(pb)
    if reason is not None:
        if args.certify and brute_solutions(d, N, args.ymax):
            print("oracle disagrees with unsolvable verdict", file=sys.stderr)
            return EXIT_VERIFY_FAILED
        return _unsolvable(out, d, N, reason)
    sols = pell.solutions(pb, count=args.count)
    lines = [f"({_group(s.x)},{_group(s.y)})" for s in sols]
    payload = _solutions_payload(d, N, sols, pell.minimality_certificate(pb, sol=sols[0]))
    status = "ok"
    if args.certify:
        expected = pell.solutions_up_to(pb, y_max=args.ymax)
        found = brute_solutions(d, N, args.ymax)
        agree = expected == found
        payload["certify"] = {"y_max": str(args.ymax), "agree": agree,
                              "oracle_count": str(len(found))}
        lines.append(f"oracle y<={args.ymax}: {len(found)} solutions, "
                     f"{'agree' if agree else 'DISAGREE'}")
        if not agree:
            status = "fail"
    out.emit(status, payload, lines)
    return EXIT_OK if status == "ok" else EXIT_VERIFY_FAILED


def cmd_family(args, out: Output) -> int:
    fam = Family(args.family)
    try:
        case = FamilyCase(fam, args.k, args.N)
    except OutOfRangeError as e:
        if not args.force_generic:
            print(f"{e} (use --force-generic to solve d={fam.d(args.k)} generically)",
                  file=sys.stderr)
            return EXIT_INVALID_D
        d = fam.d(args.k)
        reason = pell.unsolvable_reason(d, args.N)
        if reason is not None:
            return _unsolvable(out, d, args.N, reason)
        sols = pell.solutions(d, args.N, args.count)
        payload = _solutions_payload(d, args.N, sols)
        payload["source"] = "generic (forced)"
        out.emit("ok", payload, [f"({s.x},{s.y})" for s in sols] + ["[generic solver]"])
        return EXIT_OK
    ans = family_answer(case)
    if ans.kind == NO_SOLUTION:
        return _unsolvable(out, case.d, case.N, ans.reason)
    sols = family_solutions(case, args.count)
    payload = _solutions_payload(case.d, case.N, sols)
    payload.update({"family": fam.value, "k": str(case.k), "kind": ans.kind,
                    "citation": ans.reason})
    cite = ans.reason if ans.kind != GENERIC else f"{ans.reason}; {'; '.join(ans.notes)}"
    out.emit("ok", payload, [f"({_group(s.x)},{_group(s.y)})" for s in sols] + [f"[{cite}]"])
    return EXIT_OK


def run_verify(k_max: int, count: int, y_max: int, d_max: int = 200) -> dict:
    """Acceptance-style sweep. Returns per-section pass/fail and failures."""
    sections = {}
    failures = []

    bad = [f"{fam.value} k={k}" for fam in Family
           for k in range(fam.min_k, k_max + 1)
           if family_cf(fam, k) != expand_sqrt(fam.d(k))]
    sections["cf_patterns"] = not bad
    failures += [f"cf pattern: {b}" for b in bad]

    reports = [crosscheck(c, count, y_max) for c in all_cases(k_max)]
    bad = [str(r) for r in reports if not r.ok]
    sections["family_crosscheck"] = not bad
    failures += bad

    bad = []
    for c in all_cases(k_max):
        if family_answer(c).kind == GENERIC:
            continue
        got = pell.solutions_up_to(c.d, c.N, y_max=y_max)
        if got != brute_solutions(c.d, c.N, y_max):
            bad.append(f"oracle completeness: d={c.d} N={c.N}")
    for d in range(2, d_max + 1):
        if is_square(d):
            continue
        for N in pell.ALLOWED_N:
            if pell.solutions_up_to(d, N, y_max=y_max) != brute_solutions(d, N, y_max):
                bad.append(f"oracle completeness: d={d} N={N}")
    sections["oracle_completeness"] = not bad
    failures += bad

    bad = [f"x^2-{d}y^2={N}" for d, N in ((3, -1), (7, -4))
           if brute_solutions(d, N, y_max) or pell.fundamental(d, N) is not None]
    sections["nonexistence"] = not bad
    failures += [f"nonexistence: {b}" for b in bad]

    return {"sections": sections, "failures": failures,
            "cases": len(reports), "ok": not failures}


def cmd_verify(args, out: Output) -> int:
    t0 = time.perf_counter()
    res = run_verify(args.kmax, args.count, args.ymax, args.dmax)
    elapsed = time.perf_counter() - t0
    payload = {"k_max": str(args.kmax), "count": str(args.count), "y_max": str(args.ymax),
               "cases": str(res["cases"]), "sections": res["sections"],
               "failures": res["failures"], "seconds": f"{elapsed:.2f}"}
    lines = [f"{name}: {'pass' if ok else 'FAIL'}" for name, ok in res["sections"].items()]
    lines += [f"  {f}" for f in res["failures"]]
    lines.append(f"{res['cases']} family cases, {elapsed:.2f}s: "
                 f"{'pass' if res['ok'] else 'FAIL'}")
    out.emit("ok" if res["ok"] else "fail", payload, lines)
    return EXIT_OK if res["ok"] else EXIT_VERIFY_FAILED


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return v


def _rhs(text: str) -> int:
    v = int(text)
    if v not in pell.ALLOWED_N:
        raise argparse.ArgumentTypeError(f"N must be one of {pell.ALLOWED_N}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    p = _Parser(prog="pellcf", description="Pell equations x^2 - d y^2 = N, N in {+-1, +-4}.")
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("cf", parents=[common], help="continued fraction of sqrt(d)")
    s.add_argument("d", type=int)

    s = sub.add_parser("solve", parents=[common], help="first solutions of x^2-dy^2=N")
    s.add_argument("d", type=int)
    s.add_argument("N", type=_rhs)
    s.add_argument("count", type=_positive, nargs="?", default=5)
    s.add_argument("--certify", action="store_true", help="cross-check against the oracle")
    s.add_argument("--ymax", type=_positive, default=10_000)

    s = sub.add_parser("family", parents=[common], help="closed-form family solutions")
    s.add_argument("family", choices=[f.value for f in Family])
    s.add_argument("k", type=int)
    s.add_argument("N", type=_rhs)
    s.add_argument("count", type=_positive, nargs="?", default=5)
    s.add_argument("--force-generic", action="store_true")

    s = sub.add_parser("verify", parents=[common], help="full verification sweep")
    s.add_argument("--kmax", type=_positive, default=30)
    s.add_argument("--count", type=_positive, default=5)
    s.add_argument("--ymax", type=_positive, default=10_000)
    s.add_argument("--dmax", type=_positive, default=200)
    return p


COMMANDS = {"cf": cmd_cf, "solve": cmd_solve, "family": cmd_family, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        print(e, file=sys.stderr)
        return EXIT_USAGE
    command = {k: str(v) if isinstance(v, int) and not isinstance(v, bool) else v
               for k, v in vars(args).items()}
    out = Output(args.format, command)
    try:
        return COMMANDS[args.cmd](args, out)
    except PerfectSquareError as e:
        print(f"invalid d: {e}", file=sys.stderr)
        out.emit("error", {"error": str(e)}, [])
        return EXIT_INVALID_D
    except UnsolvableError as e:
        return _unsolvable(out, e.d, e.N, e.reason)


if __name__ == "__main__":
    sys.exit(main())
