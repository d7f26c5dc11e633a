"""Command line interface: ``tvps gen|label|verify|bounds|solve|bench``.

Exit codes: 0 success / irregular, 1 verification negative, 2 usage error,
3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import tempfile
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import bounds, cycles, products, solver
from .errors import InvalidParameter, InvalidWitness, MalformedLabeling, TvpsError, VerificationError
from .graphs import Graph, make_cycle, parse_family_spec
from .labeling import (CYCLE_OPTIMUM, TotalLabeling, is_product_irregular, product_degrees,
                       strength)

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

METHODS = ("auto", "table", "div3", "div4", "prime_chain", "path", "greedy", "hamiltonian", "grid")


class UsageError(Exception):
    pass


def write_atomic(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    target = Path(path)
    fd, tmp = tempfile.mkstemp(dir=target.parent or ".", prefix=f".{target.name}.")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, target)
    except BaseException:
        os.unlink(tmp)
        raise


def load_graph(arg: str) -> Graph:
    """A path to a graph JSON file, or a family spec like ``cycle:5``."""
    p = Path(arg)
    if p.is_file():
        return Graph.from_json(p.read_text())
    return parse_family_spec(arg)


def _dims(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad dimension list {text!r}") from None


def _dump(obj) -> str:
    return json.dumps(obj) + "\n"


# -- gen -------------------------------------------------------------------

def cmd_gen(args) -> int:
    g = parse_family_spec(args.spec)
    write_atomic(args.out, g.to_dot() if args.dot else _dump(g.to_dict()))
    return EXIT_OK


# -- label -------------------------------------------------------------------

def build_labeling(g: Graph, method: str, budget: int | None = None,
                   witness: list[int] | None = None, semi: bool = False
                   ) -> tuple[TotalLabeling, dict]:
    """Dispatch to a construction; returns the labeling and its provenance."""
    fam = g.family
    if method == "auto":
        method = {"cycle": "auto", "path": "path", "grid": "grid", "toroidal_grid": "grid",
                  "complete": "hamiltonian"}.get(fam, "greedy")
        if method == "auto":
            lab, used = cycles.auto_label_cycle_with_method(g.n)
            plan = {}
            if used == "prime_chain":
                plan = cycles.plan_prime_chain(g.n, cycles.best_chain_budget(g.n)).to_dict()
            return lab.with_graph(g), {"method": used, "plan": plan}
    if method == "greedy":
        return bounds.greedy_upper_labeling(g), {"method": "greedy", "plan": {}}
    if method in ("table", "div3", "div4", "prime_chain"):
        if fam != "cycle":
            raise UsageError(f"method {method} applies to cycles only")
        if method == "table":
            return cycles.label_cycle_small(g.n).with_graph(g), {"method": "table", "plan": {}}
        if method == "div3":
            return cycles.label_cycle_div3(g.n).with_graph(g), {"method": "div3", "plan": {}}
        if method == "div4":
            return cycles.label_cycle_div4(g.n).with_graph(g), {"method": "div4", "plan": {}}
        lab, plan = cycles.label_cycle_prime_chain(g.n, budget)
        return lab.with_graph(g), {"method": "prime_chain", "plan": plan.to_dict()}
    if method == "path":
        if fam != "path":
            raise UsageError("method path applies to paths only")
        return cycles.label_path(g.n).with_graph(g), {"method": "path", "plan": {}}
    if method == "grid":
        if fam not in ("grid", "toroidal_grid"):
            raise UsageError("method grid applies to grids and toroidal grids only")
        res = products.label_grid(g.params, toroidal=fam == "toroidal_grid")
        plan = res.budget.to_dict() if res.budget else {}
        plan.update({"P": res.max_edge_label, "R": res.vertex_label_bound})
        return res.labeling.with_graph(g), {"method": "grid", "plan": plan}
    if method == "hamiltonian":
        if witness is None:
            if fam in ("complete", "cycle"):
                witness = list(range(g.n))
            elif fam == "path":
                witness, semi = list(range(g.n)), True
            else:
                raise UsageError("hamiltonian needs --witness")
        lab = cycles.label_hamiltonian(g, witness, closed=not semi)
        return lab, {"method": "hamiltonian", "plan": {"witness": witness, "closed": not semi}}
    raise UsageError(f"unknown method {method!r}")


def cmd_label(args) -> int:
    if args.grid or args.torus:
        if args.graph:
            raise UsageError("give either a graph or --grid/--torus, not both")
        spec = f"grid:{args.grid}" if args.grid else f"torus:{args.torus}"
        g = parse_family_spec(spec)
    elif args.graph:
        g = load_graph(args.graph)
    else:
        raise UsageError("label needs a graph, --grid or --torus")
    witness = _dims(args.witness) if args.witness else None
    lab, prov = build_labeling(g, args.method, args.budget, witness, args.semi)
    ok, pair = is_product_irregular(lab)
    if not ok:
        print(f"refusing to write: vertices {pair} collide", file=sys.stderr)
        return EXIT_NEGATIVE
    out = lab.to_dict()
    out["strength"] = lab.strength
    out["provenance"] = prov
    write_atomic(args.out, _dump(out))
    if args.graph_out:
        write_atomic(args.graph_out, _dump(g.to_dict()))
    return EXIT_OK


# -- verify ------------------------------------------------------------------

def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    try:
        data = json.loads(Path(args.labeling).read_text())
        lab = TotalLabeling.from_dict(g, data)
    except (MalformedLabeling, KeyError) as exc:
        raise UsageError(f"labeling does not fit the graph: {exc}") from None
    pds = product_degrees(lab)
    ok, pair = is_product_irregular(lab)
    print(f"strength: {strength(lab)}")
    print(f"product degrees (sorted): {sorted(pds)}")
    if ok:
        print(f"irregular, strength {strength(lab)}")
        return EXIT_OK
    u, v = pair
    print(f"NOT irregular: vertices {u} and {v} share product degree {pds[u]}")
    return EXIT_NEGATIVE


# -- bounds ------------------------------------------------------------------

def cmd_bounds(args) -> int:
    g = load_graph(args.graph)
    rep = bounds.bound_report(g, constructive=not args.no_construct)
    write_atomic(args.out, _dump(rep.to_dict()))
    return EXIT_OK


# -- solve -------------------------------------------------------------------

def cmd_solve(args) -> int:
    g = load_graph(args.graph)
    cfg = solver.SearchConfig(max_strength=args.max_s, node_budget=args.budget_nodes,
                              time_budget=args.time_budget)
    res = solver.tvps_exact(g, cfg)
    if res.complete:
        write_atomic(args.out, _dump({"tvps": res.value, "witness": res.witness.to_dict()}))
        return EXIT_OK
    write_atomic(args.out, _dump({"tvps": None, "interval": [res.lower, res.upper],
                                  "log": res.log}))
    return EXIT_BUDGET


# -- bench -------------------------------------------------------------------

CSV_COLUMNS = ("n", "lower", "div3", "div4", "chain", "best")


def bench_row(n: int) -> dict:
    """Achieved strengths of every cycle construction on C_n, all verified."""
    lower = bounds.cycle_cuberoot_lower_bound(n)
    lower = max(lower, bounds.exact_multiset_lower_bound(make_cycle(n)))
    row = {"n": n, "lower": lower, "div3": "", "div4": "", "chain": "", "best": ""}
    found = []
    if n >= 7:
        row["div3"] = cycles.label_cycle_div3(n).strength
        found.append(row["div3"])
    if n >= 13:
        row["div4"] = cycles.label_cycle_div4(n).strength
        found.append(row["div4"])
    lab, _ = cycles.label_cycle_prime_chain(n, cycles.best_chain_budget(n))
    row["chain"] = lab.strength
    found.append(row["chain"])
    if n in CYCLE_OPTIMUM:
        found.append(cycles.label_cycle_small(n).strength)
    row["best"] = min(found)
    return row


def _safe_row(n):
    try:
        return bench_row(n), None
    except TvpsError as exc:
        return None, f"n={n}: {exc}"


def cmd_bench(args) -> int:
    out = []
    out.append("cycle  known  table  exact")
    cfg = solver.SearchConfig()
    mismatches = 0
    for n in range(3, 17):
        tab = cycles.label_cycle_small(n).strength
        exact = ""
        if n <= args.exact_max:
            exact = solver.tvps_exact(make_cycle(n), cfg).value
        if tab != CYCLE_OPTIMUM[n] or (exact != "" and exact != CYCLE_OPTIMUM[n]):
            mismatches += 1
        out.append(f"C_{n:<4} {CYCLE_OPTIMUM[n]:>5}  {tab:>5}  {exact!s:>5}")
    out.append("")
    threads = max(1, int(os.environ.get("TVPS_THREADS", "1") or 1))
    ns = range(3, args.max_n + 1)
    if threads > 1:
        with ProcessPoolExecutor(threads) as ex:
            results = list(ex.map(_safe_row, ns, chunksize=32))
    else:
        results = [_safe_row(n) for n in ns]
    rows = [r for r, _ in results if r is not None]
    failures = [e for _, e in results if e is not None]
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    if args.csv:
        write_atomic(args.csv, buf.getvalue())
    out.append(f"{'n':>6} {'lower':>6} {'div3':>6} {'div4':>6} {'chain':>6} {'best':>6}")
    step = max(1, len(rows) // 40)
    for r in rows[::step]:
        out.append(" ".join(f"{r[c]!s:>6}" for c in CSV_COLUMNS))
    out.append(f"\nswept n=3..{args.max_n}: {len(rows)} verified, {len(failures)} failures, "
               f"{mismatches} table mismatches")
    out.extend(failures)
    print("\n".join(out))
    return EXIT_OK if not failures and not mismatches else EXIT_NEGATIVE


# -- entry point ---------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tvps", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a graph as JSON (or DOT)")
    p.add_argument("spec", help="cycle:n, path:n, grid:a,b,..., torus:a,b,..., complete:n, "
                                "multipartite:m1,m2,...")
    p.add_argument("-o", "--out")
    p.add_argument("--dot", action="store_true")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("label", help="construct and verify a labeling")
    p.add_argument("graph", nargs="?", help="graph JSON file or family spec")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--grid", metavar="DIMS")
    p.add_argument("--torus", metavar="DIMS")
    p.add_argument("--budget", type=int, help="strength budget for prime_chain")
    p.add_argument("--witness", help="comma-separated Hamiltonian cycle/path")
    p.add_argument("--semi", action="store_true", help="witness is a Hamiltonian path")
    p.add_argument("-o", "--out")
    p.add_argument("--graph-out")
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("verify", help="check a labeling against a graph")
    p.add_argument("graph")
    p.add_argument("labeling")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="lower and upper bounds as JSON")
    p.add_argument("graph")
    p.add_argument("--no-construct", action="store_true")
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("solve", help="exact tvps by branch and bound")
    p.add_argument("--graph", required=True)
    p.add_argument("--max-s", type=int, default=8)
    p.add_argument("--budget-nodes", type=int, default=10**9)
    p.add_argument("--time-budget", type=float, default=300.0)
    p.add_argument("-o", "--out")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("bench", help="reproduce small-cycle values and sweep constructions")
    p.add_argument("--max-n", type=int, default=200)
    p.add_argument("--exact-max", type=int, default=16)
    p.add_argument("--csv")
    p.set_defaults(func=cmd_bench)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, InvalidParameter, InvalidWitness) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except TvpsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
