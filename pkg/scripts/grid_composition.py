"""Composed labelings of grids and toroidal grids with their prime budgets."""

import argparse
import json

from tvps.products import label_grid


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("dims", nargs="*", default=["7,7", "5,5,5", "20,20", "10,10,10"])
    ap.add_argument("--planar", action="store_true", help="paths instead of cycles")
    ap.add_argument("--plan", action="store_true", help="also print the budget plan")
    args = ap.parse_args()
    for spec in args.dims:
        dims = [int(x) for x in spec.split(",")]
        res = label_grid(dims, toroidal=not args.planar)
        kind = "G" if args.planar else "T"
        print(f"{kind}{'x'.join(map(str, dims))}: strength {res.strength}, "
              f"P = {res.max_edge_label}, R = {res.vertex_label_bound}")
        if args.plan and res.budget is not None:
            print(json.dumps(res.budget.to_dict()))


if __name__ == "__main__":
    main()
