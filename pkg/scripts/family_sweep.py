"""Crosscheck every family case up to k_max and print a per-family summary.

    python scripts/family_sweep.py --kmax 60 --count 8 --workers 4
"""
import argparse
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor

from pellcf.families import all_cases, crosscheck, family_answer


def check(case, count, y_max):
    return crosscheck(case, count, y_max)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--kmax", type=int, default=30)
    ap.add_argument("--count", type=int, default=5)
    ap.add_argument("--ymax", type=int, default=10_000)
    ap.add_argument("--workers", type=int, default=1)
    args = ap.parse_args()

    cases = all_cases(args.kmax)
    t0 = time.perf_counter()
    with ProcessPoolExecutor(max_workers=args.workers) as pool:
        reports = list(pool.map(check, cases, [args.count] * len(cases),
                                [args.ymax] * len(cases)))
    elapsed = time.perf_counter() - t0

    kinds = Counter((c.family.value, c.N, family_answer(c).kind) for c in cases)
    for (fam, N, kind), n in sorted(kinds.items()):
        print(f"{fam:5s} N={N:+d}  {kind:12s} {n:4d}")
    failed = [r for r in reports if not r.ok]
    for r in failed:
        print(r)
    print(f"{len(reports)} cases, {len(failed)} failures, {elapsed:.2f}s")


if __name__ == "__main__":
    main()
