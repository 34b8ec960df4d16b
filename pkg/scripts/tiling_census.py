"""Tabulate tiling counts, breakability splits and the six-fold Pell bijection.

    python scripts/tiling_census.py --max-n 12
"""

import argparse

from zeckit.recurrence import PELL, eval_general, tiling_of
from zeckit.tiling import break_counts, count_tilings, six_pell_bijection


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-n", type=int, default=10)
    args = parser.parse_args()

    spec = tiling_of(PELL).spec
    print(" n   tilings   recurrence   splits at middle cell")
    for n in range(0, args.max_n + 1):
        count = count_tilings(spec, n)
        split = break_counts(spec, n, n // 2) if n >= 2 else "-"
        print(f"{n:>2}  {count:>8}  {eval_general(spec, n):>11}   {split}")

    print("\n n   6 p_n   p_(n+2) + p_(n-2)   verified")
    for n in range(2, min(args.max_n, 12) + 1):
        r = six_pell_bijection(n)
        print(f"{n:>2}  {r.domain_size:>6}   {r.plus_size:>8} + {r.minus_size:<6}   {r.verified}")


if __name__ == "__main__":
    main()
