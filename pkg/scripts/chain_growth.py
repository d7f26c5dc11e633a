"""Growth of the prime-chain strength against n^(1/3) ln n."""

import argparse
import csv
import math
import sys
import time

from tvps.bounds import cycle_cuberoot_lower_bound
from tvps.cycles import best_chain_budget, label_cycle_prime_chain


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", default="1000,3000,10000,30000,100000")
    ap.add_argument("--minimal", action="store_true",
                    help="use the least feasible budget instead of the best candidate")
    args = ap.parse_args()
    w = csv.writer(sys.stdout, lineterminator="\n")
    w.writerow(["n", "p", "copies", "leftover", "strength", "cuberoot_lower", "ratio", "seconds"])
    for n in (int(x) for x in args.sizes.split(",")):
        t = time.perf_counter()
        budget = None if args.minimal else best_chain_budget(n)
        lab, plan = label_cycle_prime_chain(n, budget)
        dt = time.perf_counter() - t
        ratio = lab.strength / (n ** (1 / 3) * math.log(n))
        w.writerow([n, plan.p, plan.copies, plan.leftover, lab.strength,
                    cycle_cuberoot_lower_bound(n), f"{ratio:.4f}", f"{dt:.2f}"])


if __name__ == "__main__":
    main()
