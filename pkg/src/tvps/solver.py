"""Exact tvps for small graphs by depth-first branch and bound.

Items are labeled vertex by vertex: when vertex v comes up, its still
unlabeled incident edges are labeled first and then v itself, so pd(v) is
fixed the moment its own label is chosen.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field

from .bounds import MAX_ENUM_DEGREE, best_lower_bound, counting_lower_bound, distinct_products
from .errors import InvalidParameter, VerificationError
from .graphs import Graph
from .labeling import TotalLabeling, is_product_irregular

EDGE_TRANSITIVE = ("cycle", "complete")


@dataclass
class SearchConfig:
    max_strength: int = 8
    node_budget: int = 10**9
    time_budget: float = 300.0
    order: str = "bfs"          # vertex order: "bfs" or "index"
    use_bounds: bool = True     # start at the best lower bound, prune by counting
    symmetry: bool = True

    def __post_init__(self):
        if self.max_strength < 1 or self.node_budget < 1 or self.time_budget <= 0:
            raise InvalidParameter("search budgets must be positive")
        if self.order not in ("bfs", "index"):
            raise InvalidParameter(f"unknown order {self.order!r}")


class Status(enum.Enum):
    YES = "yes"
    NO = "no"
    BUDGET = "budget-exhausted"


@dataclass
class SearchResult:
    status: Status
    witness: TotalLabeling | None = None
    nodes: int = 0
    seconds: float = 0.0


@dataclass
class ExactResult:
    lower: int
    upper: int
    witness: TotalLabeling | None
    complete: bool
    nodes: int = 0
    log: list[tuple[int, str]] = field(default_factory=list)

    @property
    def value(self) -> int | None:
        return self.lower if self.complete else None


class _Budget(Exception):
    pass


def _vertex_order(g: Graph, how: str) -> list[int]:
    if how == "index":
        return list(range(g.n))
    seen, out = set(), []
    for root in range(g.n):
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            v = queue.pop(0)
            out.append(v)
            for u in g.adjacency[v]:
                if u not in seen:
                    seen.add(u)
                    queue.append(u)
    return out


def _edge_transitive(g: Graph) -> bool:
    if g.family in EDGE_TRANSITIVE:
        return True
    return g.family == "complete_multipartite" and len(g.params) == 2


def exists_labeling(g: Graph, s: int, cfg: SearchConfig | None = None) -> SearchResult:
    """Decide whether a product-irregular labeling of strength <= s exists."""
    cfg = cfg or SearchConfig()
    if g.n == 0:
        raise InvalidParameter("empty graph")
    if s < 1:
        raise InvalidParameter("strength must be at least 1")
    t0 = time.monotonic()
    order = _vertex_order(g, cfg.order)

    # items: ("e", edge) or ("v", vertex)
    items = []
    done = set()
    for v in order:
        for e in g.incident_edges[v]:
            if e not in done:
                done.add(e)
                items.append(("e", e))
        items.append(("v", v))
    first_edge = next((i for i, it in enumerate(items) if it[0] == "e"), None)
    break_symmetry = cfg.symmetry and _edge_transitive(g) and first_edge is not None

    deg = g.degrees
    counting = cfg.use_bounds and g.max_degree <= MAX_ENUM_DEGREE
    if counting:
        classes = sorted(set(deg))
        pools = {d: distinct_products(s, d + 1) for d in classes}
        union = frozenset().union(*pools.values())
        avail = {d: len(pools[d]) for d in classes}
        remaining = {d: 0 for d in classes}
        for d in deg:
            remaining[d] += 1
        avail_union = [len(union)]
        if any(remaining[d] > avail[d] for d in classes) or g.n > len(union):
            return SearchResult(Status.NO, None, 0, time.monotonic() - t0)

    partial = [1] * g.n
    vlab = [0] * g.n
    elab: dict[tuple[int, int], int] = {}
    used: set[int] = set()
    nodes = [0]
    edge_floor = [1]

    def close(x, d):
        used.add(x)
        if counting:
            remaining[d] -= 1
            for c in classes:
                if x in pools[c]:
                    avail[c] -= 1
            if x in union:
                avail_union[0] -= 1

    def reopen(x, d):
        used.discard(x)
        if counting:
            remaining[d] += 1
            for c in classes:
                if x in pools[c]:
                    avail[c] += 1
            if x in union:
                avail_union[0] += 1

    def feasible():
        if not counting:
            return True
        if sum(remaining.values()) > avail_union[0]:
            return False
        return all(remaining[c] <= avail[c] for c in classes)

    def tick():
        nodes[0] += 1
        if nodes[0] > cfg.node_budget:
            raise _Budget
        if nodes[0] & 4095 == 0 and time.monotonic() - t0 > cfg.time_budget:
            raise _Budget

    def dfs(k):
        if k == len(items):
            return True
        kind, obj = items[k]
        if kind == "e":
            u, v = obj
            lo = edge_floor[0] if (break_symmetry and k != first_edge) else 1
            for w in range(lo, s + 1):
                tick()
                elab[obj] = w
                partial[u] *= w
                partial[v] *= w
                if break_symmetry and k == first_edge:
                    edge_floor[0] = w
                if dfs(k + 1):
                    return True
                partial[u] //= w
                partial[v] //= w
            del elab[obj]
            return False
        v = obj
        for w in range(1, s + 1):
            x = partial[v] * w
            if x in used:
                continue
            tick()
            vlab[v] = w
            close(x, deg[v])
            if feasible() and dfs(k + 1):
                return True
            reopen(x, deg[v])
        return False

    try:
        found = dfs(0)
    except _Budget:
        return SearchResult(Status.BUDGET, None, nodes[0], time.monotonic() - t0)
    elapsed = time.monotonic() - t0
    if not found:
        return SearchResult(Status.NO, None, nodes[0], elapsed)
    lab = TotalLabeling(g, tuple(vlab), dict(elab))
    ok, pair = is_product_irregular(lab)
    if not ok:
        raise VerificationError(f"solver witness collides at {pair}")
    return SearchResult(Status.YES, lab, nodes[0], elapsed)


def tvps_exact(g: Graph, cfg: SearchConfig | None = None) -> ExactResult:
    """Least s with a product-irregular labeling, by ascending search.

    If a decision call runs out of budget the result is the bracket
    ``[lower, upper]`` with ``complete`` False.
    """
    cfg = cfg or SearchConfig()
    if cfg.use_bounds:
        lb = best_lower_bound(g) if g.max_degree <= MAX_ENUM_DEGREE else counting_lower_bound(g)
    else:
        lb = 1
    ub = max(g.n, 1)    # greedy labels 1..n always work
    res = ExactResult(lb, ub, None, False)
    s = lb
    while s <= min(cfg.max_strength, ub):
        out = exists_labeling(g, s, cfg)
        res.nodes += out.nodes
        res.log.append((s, out.status.value))
        if out.status is Status.YES:
            res.lower = res.upper = s
            res.witness = out.witness
            res.complete = True
            return res
        if out.status is Status.BUDGET:
            res.lower = s
            return res
        s += 1
        res.lower = s
    return res
