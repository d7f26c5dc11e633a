"""Strength of every cycle construction over a range of n, as CSV."""

import argparse
import sys

from tvps.cli import CSV_COLUMNS, bench_row


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lo", type=int, default=3)
    ap.add_argument("--hi", type=int, default=500)
    args = ap.parse_args()
    print(",".join(CSV_COLUMNS))
    worst = 0
    for n in range(args.lo, args.hi + 1):
        row = bench_row(n)
        worst = max(worst, row["best"] - row["lower"])
        print(",".join(str(row[c]) for c in CSV_COLUMNS))
    print(f"largest gap best - lower: {worst}", file=sys.stderr)


if __name__ == "__main__":
    main()
