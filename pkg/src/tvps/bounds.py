"""Lower and upper bounds on the total vertex product irregularity strength."""

from __future__ import annotations

import decimal
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .errors import EnumerationRefused, InvalidParameter, VerificationError
from .graphs import Graph
from .labeling import TotalLabeling, is_product_irregular, product_degrees
from .numtheory import iroot_ceil

MAX_ENUM_DEGREE = 8


# -- real-valued formulas ------------------------------------------------

def _ceil_decimal(expr, prec: int = 60) -> int:
    """Ceiling of ``expr(ctx)`` evaluated with guard digits.

    The formulas involve 1/e, so their values are never integers; if a value
    lands suspiciously close to one we retry with more digits until it
    separates.
    """
    while True:
        with decimal.localcontext() as ctx:
            ctx.prec = prec
            x = expr(ctx)
            f = x.to_integral_value(rounding=decimal.ROUND_FLOOR)
            gap = min(x - f, f + 1 - x)
            if gap > decimal.Decimal(10) ** (-(prec // 2)):
                return int(x.to_integral_value(rounding=decimal.ROUND_CEILING))
        if prec > 2000:
            raise ArithmeticError("could not separate value from an integer")
        prec *= 2


def _class_bound(d: int, count: int) -> int:
    def expr(ctx):
        D = decimal.Decimal
        root = (D(count).ln() / (d + 1)).exp()
        return D(d + 1) / D(1).exp() * root - d

    return _ceil_decimal(expr)


def counting_lower_bound(g: Graph) -> int:
    """max over present degrees d of ceil((d+1)/e * n_d^(1/(d+1)) - d), at least 1."""
    if g.n == 0:
        raise InvalidParameter("empty graph")
    return max([1, *(_class_bound(d, c) for d, c in g.degree_counts.items() if c > 0)])


def regular_lower_bound(g: Graph) -> int:
    if not g.is_regular():
        raise InvalidParameter("graph is not regular")
    return max(1, _class_bound(g.max_degree, g.n))


def icbrt_ceil(x: int) -> int:
    """Smallest integer c >= 0 with c**3 >= x."""
    return iroot_ceil(x, 3) if x > 0 else 0


def cycle_cuberoot_lower_bound(n: int) -> int:
    """ceil(cbrt(6n) - 1), i.e. the least s with (s+1)^3 >= 6n."""
    if n < 3:
        raise InvalidParameter("cycle length must be at least 3")
    return icbrt_ceil(6 * n) - 1


# -- distinct products -----------------------------------------------------

@lru_cache(maxsize=None)
def distinct_products(s: int, size: int) -> frozenset[int]:
    """All products of ``size`` factors drawn (with repetition) from 1..s."""
    if s < 1 or size < 0:
        raise InvalidParameter("need s >= 1 and size >= 0")
    if size == 0:
        return frozenset({1})
    prev = distinct_products(s, size - 1)
    return frozenset(x * a for x in prev for a in range(1, s + 1))


def count_distinct_products(s: int, multiset_size: int) -> int:
    return len(distinct_products(s, multiset_size))


def _check_enumerable(g: Graph) -> None:
    if g.n == 0:
        raise InvalidParameter("empty graph")
    if g.max_degree > MAX_ENUM_DEGREE:
        raise EnumerationRefused(
            f"max degree {g.max_degree} exceeds enumeration limit {MAX_ENUM_DEGREE}"
        )


def exact_multiset_lower_bound(g: Graph) -> int:
    """Least s such that each degree class d has at least n_d distinct
    achievable products of d+1 labels from 1..s."""
    _check_enumerable(g)
    s = 1
    while any(count_distinct_products(s, d + 1) < c for d, c in g.degree_counts.items()):
        s += 1
    return s


def pooled_multiset_lower_bound(g: Graph) -> int:
    """Like :func:`exact_multiset_lower_bound`, but every union of degree
    classes must also fit into the union of their achievable products."""
    _check_enumerable(g)
    classes = list(g.degree_counts.items())

    def feasible(s):
        for k in range(1, len(classes) + 1):
            for sub in combinations(classes, k):
                pool = set().union(*(distinct_products(s, d + 1) for d, _ in sub))
                if len(pool) < sum(c for _, c in sub):
                    return False
        return True

    s = 1
    while not feasible(s):
        s += 1
    return s


def multipartite_lower_bound(parts) -> int:
    """3 if the smallest part has at least 3 vertices, else 2.

    With labels {1, 2} every pd is a power of two not exceeding 2^(Delta+1),
    so at most Delta + 2 values exist, and Delta = n - m_min.
    """
    parts = [int(m) for m in parts]
    if len(parts) < 2 or min(parts) < 1:
        raise InvalidParameter("need at least two non-empty parts")
    return 3 if min(parts) >= 3 else 2


# -- greedy construction --------------------------------------------------

def greedy_upper_labeling(g: Graph, edge_labels: dict | None = None) -> TotalLabeling:
    """Keep edge labels (default 1), then hand out vertex labels 1..n in
    order of non-decreasing temporary product degree."""
    if g.n < 1:
        raise InvalidParameter("graph must have a vertex")
    el = {e: 1 for e in g.edges} if edge_labels is None else dict(edge_labels)
    temp = product_degrees(TotalLabeling(g, (1,) * g.n, el))
    order = sorted(range(g.n), key=lambda v: (temp[v], v))
    vl = [0] * g.n
    for rank, v in enumerate(order, start=1):
        vl[v] = rank
    lab = TotalLabeling(g, tuple(vl), el)
    ok, pair = is_product_irregular(lab)
    if not ok:
        raise VerificationError(f"greedy labeling collided at {pair}")
    return lab


# -- reports ----------------------------------------------------------------

@dataclass
class BoundEntry:
    name: str
    kind: str
    value: int
    ref: str


@dataclass
class BoundReport:
    entries: list[BoundEntry] = field(default_factory=list)

    def add(self, name, kind, value, ref):
        if kind not in ("lower", "upper"):
            raise ValueError(kind)
        self.entries.append(BoundEntry(name, kind, int(value), ref))

    @property
    def best_lower(self) -> int | None:
        vals = [e.value for e in self.entries if e.kind == "lower"]
        return max(vals) if vals else None

    @property
    def best_upper(self) -> int | None:
        vals = [e.value for e in self.entries if e.kind == "upper"]
        return min(vals) if vals else None

    def to_dict(self) -> dict:
        return {
            "bounds": [
                {"name": e.name, "kind": e.kind, "value": e.value, "ref": e.ref}
                for e in self.entries
            ],
            "best_lower": self.best_lower,
            "best_upper": self.best_upper,
        }


def best_lower_bound(g: Graph) -> int:
    lb = max(1 if g.n <= 1 else 2, counting_lower_bound(g))
    if g.max_degree <= MAX_ENUM_DEGREE:
        lb = max(lb, pooled_multiset_lower_bound(g))
    if g.family == "cycle":
        lb = max(lb, cycle_cuberoot_lower_bound(g.n))
    if g.family == "complete_multipartite":
        lb = max(lb, multipartite_lower_bound(g.params))
    return lb


def bound_report(g: Graph, constructive: bool = True) -> BoundReport:
    """Collect every bound that applies to ``g``.

    With ``constructive`` set, upper bounds come from labelings that are
    actually built and verified.
    """
    rep = BoundReport()
    if g.n >= 2:
        rep.add("two_vertices", "lower", 2, "s = 1 makes every product degree 1")
    rep.add("counting", "lower", counting_lower_bound(g),
            "distinct label multisets per degree class")
    if g.is_regular():
        rep.add("regular_counting", "lower", regular_lower_bound(g),
                "distinct label multisets, r-regular form")
    if g.max_degree <= MAX_ENUM_DEGREE:
        rep.add("exact_multiset", "lower", exact_multiset_lower_bound(g),
                "enumerated distinct products per degree class")
        rep.add("pooled_multiset", "lower", pooled_multiset_lower_bound(g),
                "enumerated distinct products over unions of degree classes")
    if g.family == "cycle":
        rep.add("cycle_cuberoot", "lower", cycle_cuberoot_lower_bound(g.n),
                "(s+1)^3 >= 6n for cycles")
    if g.family == "complete_multipartite":
        rep.add("multipartite_two_labels", "lower", multipartite_lower_bound(g.params),
                "labels {1,2} give at most Delta+2 powers of two")
    rep.add("order", "upper", g.n, "greedy vertex labels 1..n")
    if constructive:
        _constructive_upper(g, rep)
    return rep


def _constructive_upper(g: Graph, rep: BoundReport) -> None:
    from . import cycles, products

    if g.family == "cycle":
        lab, method = cycles.auto_label_cycle_with_method(g.n)
        rep.add(f"cycle_{method}", "upper", lab.strength, "verified cycle construction")
    elif g.family == "path":
        rep.add("path_from_cycle", "upper", cycles.label_path(g.n).strength,
                "cycle labeling minus an edge labeled 1")
    elif g.family == "complete" and g.n >= 3:
        lab = cycles.label_hamiltonian(g, list(range(g.n)))
        rep.add("hamiltonian_cycle", "upper", lab.strength,
                "cycle labeling on a Hamiltonian cycle, other edges 1")
    elif g.family in ("grid", "toroidal_grid") and min(g.params) >= 3:
        res = products.label_grid(g.params, toroidal=g.family == "toroidal_grid")
        rep.add("grid_composition", "upper", res.labeling.strength,
                "composition of factor labelings over disjoint primes")
