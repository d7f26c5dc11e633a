"""Labelings of grids and toroidal grids composed from factor labelings
whose labels live on pairwise disjoint sets of primes."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Sequence

from . import numtheory
from .cycles import chain_layout, cycle_to_path, label_path, auto_label_cycle, materialize
from .errors import CapacityError, InvalidParameter, UnsupportedLabeling, VerificationError
from .graphs import Graph, VertexIndexer, canonical_edge, make_grid, make_torus
from .labeling import TotalLabeling, cycle_labeling, is_product_irregular, verify
from .numtheory import iroot_ceil, iroot_floor


def prime_support(lab: TotalLabeling) -> list[int]:
    """Sorted distinct prime labels; raises if any label is composite."""
    labels = set(lab.vertex_labels) | set(lab.edge_labels.values())
    bad = sorted(x for x in labels if x != 1 and not numtheory.is_prime(x))
    if bad:
        raise UnsupportedLabeling(f"labels must be 1 or prime; found composite {bad[0]}")
    return sorted(labels - {1})


def substitute_labels(lab: TotalLabeling, mapping: dict[int, int]) -> TotalLabeling:
    vl = tuple(mapping.get(x, x) for x in lab.vertex_labels)
    el = {e: mapping.get(w, w) for e, w in lab.edge_labels.items()}
    return TotalLabeling(lab.graph, vl, el)


def remap_prime_support(lab: TotalLabeling, target_pool: Sequence[int]) -> TotalLabeling:
    """Send the i-th smallest prime label to ``target_pool[i]``; 1 is fixed."""
    support = prime_support(lab)
    pool = [int(x) for x in target_pool]
    if len(pool) < len(support):
        raise CapacityError(f"pool holds {len(pool)} primes, labeling uses {len(support)}")
    used = pool[: len(support)]
    if len(set(used)) != len(used) or not all(numtheory.is_prime(x) for x in used):
        raise InvalidParameter("target pool must consist of distinct primes")
    out = substitute_labels(lab, dict(zip(support, used)))
    return verify(out, "remapped labeling")


def compose_product_labeling(factors: Sequence[TotalLabeling], product: Graph,
                             indexer: VertexIndexer) -> TotalLabeling:
    """Edges inherit the label of the factor edge they copy; a composite
    vertex gets the product of its coordinates' vertex labels."""
    if [f.graph.n for f in factors] != list(indexer.dims):
        raise InvalidParameter("factor sizes do not match the product indexer")
    supports = [set(prime_support(f)) for f in factors]
    for i in range(len(supports)):
        for j in range(i + 1, len(supports)):
            if supports[i] & supports[j]:
                raise InvalidParameter(f"factors {i} and {j} share prime labels")
    if len(factors) == 1:
        return verify(factors[0].with_graph(product), "single-factor product")
    coords = [indexer.coords(v) for v in range(product.n)]
    vl = tuple(math.prod(f.vertex_labels[c] for f, c in zip(factors, cs)) for cs in coords)
    el = {}
    for u, v in product.edges:
        cu, cv = coords[u], coords[v]
        diff = [j for j in range(len(cu)) if cu[j] != cv[j]]
        if len(diff) != 1:
            raise InvalidParameter(f"({u}, {v}) is not a Cartesian product edge")
        j = diff[0]
        try:
            el[(u, v)] = factors[j].edge_labels[canonical_edge(cu[j], cv[j])]
        except KeyError:
            raise InvalidParameter(f"({u}, {v}) has no matching edge in factor {j}") from None
    out = TotalLabeling(product, vl, el)
    ok, pair = is_product_irregular(out)
    if not ok:
        raise VerificationError(f"composition invalid: vertices {pair} collide")
    return out


# -- budgets ----------------------------------------------------------------

@dataclass
class DimensionBudget:
    n: int
    edge_target: int        # floor(n^(k/(2k+1)))
    vertex_target: int      # ceil(n^(1/(2k+1)))
    p: int                  # chain prime: edge labels are 1 and p - 1 primes
    r: int                  # vertex primes reserved, ceil(2n / (p(p-1)))
    edge_pool: list[int] = field(default_factory=list)
    vertex_pool: list[int] = field(default_factory=list)


@dataclass
class FactorBudget:
    dims: tuple[int, ...]
    toroidal: bool
    dimensions: list[DimensionBudget]

    @property
    def total_primes(self) -> int:
        """sum of (p_j + r_j)."""
        return sum(d.p + d.r for d in self.dimensions)

    def to_dict(self) -> dict:
        return {
            "dims": list(self.dims),
            "toroidal": self.toroidal,
            "total_primes": self.total_primes,
            "dimensions": [
                {"n": d.n, "edge_target": d.edge_target, "vertex_target": d.vertex_target,
                 "p": d.p, "r": d.r, "edge_pool": d.edge_pool, "vertex_pool": d.vertex_pool}
                for d in self.dimensions
            ],
        }


def plan_grid_budgets(dims: Sequence[int], toroidal: bool = True) -> FactorBudget:
    dims = tuple(int(d) for d in dims)
    if not dims or any(d < 3 for d in dims):
        raise InvalidParameter("every dimension must be at least 3")
    k = len(dims)
    out = []
    for n in dims:
        edge_target = iroot_floor(n**k, 2 * k + 1)
        vertex_target = iroot_ceil(n, 2 * k + 1)
        p = numtheory.greatest_prime_le(max(3, edge_target))
        r = -(-2 * n // (p * (p - 1)))
        out.append(DimensionBudget(n, edge_target, vertex_target, p, r))
    # smallest primes go to vertex roles, then edge pools by dimension
    total = sum(d.r for d in out) + sum(d.p - 1 for d in out)
    primes = iter(numtheory.first_primes(total))
    for d in out:
        d.vertex_pool = [next(primes) for _ in range(d.r)]
    for d in out:
        d.edge_pool = [next(primes) for _ in range(d.p - 1)]
    return FactorBudget(dims, toroidal, out)


@dataclass
class GridResult:
    labeling: TotalLabeling
    budget: FactorBudget | None
    factors: list[TotalLabeling]
    indexer: VertexIndexer
    max_edge_label: int     # P
    vertex_label_bound: int  # R, product of the factors' largest vertex labels

    @property
    def strength(self) -> int:
        return self.labeling.strength

    @property
    def bound(self) -> int:
        return max(self.max_edge_label, self.vertex_label_bound)


def _factor_labeling(d: DimensionBudget, toroidal: bool) -> TotalLabeling:
    """Prime-chain labeling of the factor, moved onto the dimension's pools."""
    layout = chain_layout(d.n, d.p)
    if layout.tiers_used > len(d.vertex_pool):
        raise CapacityError(f"dimension {d.n}: vertex pool too small")
    extra = numtheory.primes_after(numtheory.nth_indexed_label(d.p - 1), layout.tiers_used)
    V, E = materialize(layout, numtheory.nth_indexed_label, lambda k: extra[k - 1])
    lab = cycle_labeling(V, E)
    lab = remap_prime_support(lab, d.edge_pool + d.vertex_pool[: layout.tiers_used])
    return lab if toroidal else cycle_to_path(lab)


def label_grid(dims: Sequence[int], toroidal: bool = True) -> GridResult:
    dims = tuple(int(d) for d in dims)
    if len(dims) == 1:
        n = dims[0]
        lab = auto_label_cycle(n) if toroidal else label_path(n)
        ix = VertexIndexer((n,))
        return GridResult(lab, None, [lab], ix, max(lab.edge_labels.values()),
                          max(lab.vertex_labels))
    budget = plan_grid_budgets(dims, toroidal)
    factors = [_factor_labeling(d, toroidal) for d in budget.dimensions]
    g, ix = make_torus(dims) if toroidal else make_grid(dims)
    lab = compose_product_labeling(factors, g, ix)
    P = max(max(f.edge_labels.values()) for f in factors)
    R = math.prod(max(f.vertex_labels) for f in factors)
    res = GridResult(lab, budget, factors, ix, P, R)
    if res.strength > res.bound:
        raise VerificationError("grid strength exceeds max(P, R)")
    return res
