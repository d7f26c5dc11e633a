"""Built-in small-cycle labelings against the exact solver, C_3..C_16."""

import argparse
import time

from tvps.bounds import best_lower_bound
from tvps.graphs import make_cycle
from tvps.labeling import CYCLE_OPTIMUM, builtin_cycle_sequence, is_product_irregular
from tvps.solver import SearchConfig, tvps_exact


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n", type=int, default=16)
    ap.add_argument("--plain", action="store_true",
                    help="search from s = 1 without bound pruning")
    args = ap.parse_args()
    cfg = SearchConfig(use_bounds=not args.plain)
    print(f"{'n':>3} {'table':>6} {'lower':>6} {'exact':>6} {'nodes':>10} {'sec':>7}")
    for n in range(3, args.max_n + 1):
        lab = builtin_cycle_sequence(n)
        assert is_product_irregular(lab)[0]
        t = time.perf_counter()
        res = tvps_exact(make_cycle(n), cfg)
        dt = time.perf_counter() - t
        mark = "" if res.value == CYCLE_OPTIMUM[n] == lab.strength else "  MISMATCH"
        print(f"{n:>3} {lab.strength:>6} {best_lower_bound(make_cycle(n)):>6} "
              f"{res.value!s:>6} {res.nodes:>10} {dt:>7.2f}{mark}")


if __name__ == "__main__":
    main()
