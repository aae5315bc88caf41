"""Timing: Lucas iteration vs fast doubling, and Pell recurrence vs powering."""
import argparse
import timeit

from pellcf import pell
from pellcf.lucas import lucas_pair, lucas_pair_fast


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    print("Lucas U_n, V_n for (k, s) = (7, 1)")
    for n in (100, 1_000, 10_000, 50_000):
        assert lucas_pair((7, 1), n) == lucas_pair_fast((7, 1), n)
        it = min(timeit.repeat(lambda: lucas_pair((7, 1), n), number=1, repeat=args.repeat))
        fd = min(timeit.repeat(lambda: lucas_pair_fast((7, 1), n), number=1, repeat=args.repeat))
        print(f"  n={n:6d}  iterate {it * 1e3:9.3f} ms   doubling {fd * 1e3:9.3f} ms")

    print("First m solutions of x^2 - d y^2 = N")
    for d, N in ((61, 1), (109, -1), (181, 4), (1021, -4)):
        for m in (50, 200):
            assert pell.solutions(d, N, m) == pell.power_solutions(d, N, m)
            rec = min(timeit.repeat(lambda: pell.solutions(d, N, m), number=1,
                                    repeat=args.repeat))
            pw = min(timeit.repeat(lambda: pell.power_solutions(d, N, m), number=1,
                                   repeat=args.repeat))
            print(f"  d={d:5d} N={N:+d} m={m:4d}  recurrence {rec * 1e3:8.2f} ms"
                  f"   powering {pw * 1e3:8.2f} ms")


if __name__ == "__main__":
    main()
