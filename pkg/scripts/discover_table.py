"""Print the golden/silver power expansions of 1..N and the identities they give.

    python scripts/discover_table.py --family fibonacci --upto 40 --window 12
"""

import argparse

from zeckit.identities import discover, verify_symbolic
from zeckit.recurrence import get_family


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--family", default="fibonacci", choices=["fibonacci", "pell"])
    parser.add_argument("--upto", type=int, default=40)
    parser.add_argument("--window", type=int, default=12)
    parser.add_argument("--gap", type=int)
    args = parser.parse_args()

    family = get_family(args.family)
    missing = []
    for c in range(1, args.upto + 1):
        found = discover(family, c, args.window, gap=args.gap)
        if not found:
            missing.append(c)
            continue
        for p in found:
            mark = "ok" if verify_symbolic(p).holds else "FAIL"
            print(f"{c:>5}  {mark:<4} {p}")
    if missing:
        print(f"no expansion within window {args.window}: {missing}")


if __name__ == "__main__":
    main()
