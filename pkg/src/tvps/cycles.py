"""Constructive product-irregular labelings of cycles, paths and
Hamiltonian graphs.

Cycle labelings are handled as two parallel lists: ``V[i]`` is the label of
vertex i and ``E[i]`` the label of edge (i, i+1 mod n), so that
pd(i) = E[i-1] * V[i] * E[i].
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from typing import Callable, Sequence

from . import numtheory
from .errors import (CapacityError, InvalidParameter, InvalidWitness,
                     VerificationError)
from .graphs import Graph, canonical_edge, make_cycle, make_path
from .labeling import (CYCLE_TABLE, TotalLabeling, builtin_cycle_sequence,
                       collision_groups, cycle_labeling, verify)


def _pd_at(V, E, i):
    return E[i - 1] * V[i] * E[i]


def cycle_lists(lab: TotalLabeling) -> tuple[list[int], list[int]]:
    n = lab.graph.n
    E = [lab.edge_labels[canonical_edge(i, (i + 1) % n)] for i in range(n)]
    return list(lab.vertex_labels), E


def label_cycle_small(n: int) -> TotalLabeling:
    if not 3 <= n <= 16:
        raise InvalidParameter(f"table covers 3 <= n <= 16, got {n}")
    return verify(builtin_cycle_sequence(n), f"table C_{n}")


# -- inductive extensions ----------------------------------------------------
#
# An anchor is a window edge, vertex, edge, ..., vertex, edge around the
# cycle.  Each step replaces the edge between the second and third anchor
# vertices by a block of new vertices that carries the anchor for s + 1.

@dataclass(frozen=True)
class _Extension:
    name: str
    bases: tuple[int, ...]      # smallest cycle lengths, one per residue
    base_strength: int
    period: int                 # new vertices per step
    anchor_edges: Callable[[int], list[int]]
    anchor_vertices: Callable[[int], list[int]]
    block_vertices: Callable[[int], list[int]]
    block_edges: Callable[[int], list[int]]


DIV3 = _Extension(
    name="div3",
    bases=(7, 8, 9),
    base_strength=3,
    period=3,
    anchor_edges=lambda s: [s - 1, s, s, s - 1],
    anchor_vertices=lambda s: [s - 1, s, s],
    block_vertices=lambda s: [s, s + 1, s + 1],
    block_edges=lambda s: [s, s + 1, s + 1, s],
)

DIV4 = _Extension(
    name="div4",
    bases=(13, 14, 15, 16),
    base_strength=4,
    period=4,
    anchor_edges=lambda s: [s - 1, s, s, s, s - 1],
    anchor_vertices=lambda s: [s, s - 2, s, s - 1],
    block_vertices=lambda s: [s + 1, s - 1, s + 1, s],
    block_edges=lambda s: [s, s + 1, s + 1, s + 1, s],
)


def _anchor_at(V, E, i, ext: _Extension, s: int) -> bool:
    """Does the anchor for strength s start at vertex i?"""
    n = len(V)
    if any(V[(i + j) % n] != x for j, x in enumerate(ext.anchor_vertices(s))):
        return False
    return all(E[(i - 1 + j) % n] == x for j, x in enumerate(ext.anchor_edges(s)))


def find_anchor(V, E, ext: _Extension, s: int) -> int:
    for i in range(len(V)):
        if _anchor_at(V, E, i, ext, s):
            return i
    raise VerificationError(f"{ext.name}: no anchor for s={s}")


@dataclass
class ExtensionTrace:
    """Construction record: base length, anchor position and strength after
    every step."""

    base: int
    steps: int = 0
    anchors: list[int] = field(default_factory=list)


def _extend(n: int, ext: _Extension, trace: ExtensionTrace | None = None) -> TotalLabeling:
    lo = ext.bases[0]
    if n < lo:
        raise InvalidParameter(f"{ext.name} needs n >= {lo}, got {n}")
    base = ext.bases[(n - lo) % ext.period]
    steps = (n - base) // ext.period
    V, E = cycle_lists(builtin_cycle_sequence(base))
    s = ext.base_strength
    i = find_anchor(V, E, ext, s)
    seen = {_pd_at(V, E, v) for v in range(len(V))}
    if len(seen) != len(V):
        raise VerificationError(f"{ext.name}: base C_{base} not irregular")
    if trace is not None:
        trace.base = base
        trace.anchors.append(i)
    for _ in range(steps):
        m = len(V)
        a = (i + 1) % m                 # edge between anchor vertices 2 and 3
        left, right = a, (a + 1) % m
        before = (_pd_at(V, E, left), _pd_at(V, E, right))
        nv, ne = ext.block_vertices(s), ext.block_edges(s)
        V[a + 1 : a + 1] = nv
        E[a : a + 1] = ne
        right = right if right == 0 else right + len(nv)
        if (_pd_at(V, E, left), _pd_at(V, E, right)) != before:
            raise VerificationError(f"{ext.name}: splice changed an old product degree")
        for j in range(a + 1, a + 1 + len(nv)):
            x = _pd_at(V, E, j)
            if x in seen:
                raise VerificationError(f"{ext.name}: new product degree {x} collides")
            seen.add(x)
        s += 1
        i = a + 1
        if not _anchor_at(V, E, i, ext, s):
            raise VerificationError(f"{ext.name}: anchor lost at s={s}")
        if trace is not None:
            trace.steps += 1
            trace.anchors.append(i)
    return verify(cycle_labeling(V, E), f"{ext.name} C_{n}")


def label_cycle_div3(n: int, trace: ExtensionTrace | None = None) -> TotalLabeling:
    """Strength max(3, ceil(n/3)) for n >= 7, grown three vertices at a time."""
    return _extend(n, DIV3, trace)


def label_cycle_div4(n: int, trace: ExtensionTrace | None = None) -> TotalLabeling:
    """Strength max(4, ceil(n/4)) for n >= 13, grown four vertices at a time."""
    return _extend(n, DIV4, trace)


# -- prime chains --------------------------------------------------------------

def chain(p: int, q: int) -> list[int]:
    """0, q, 2q, ..., (p-1)q mod p; the closing 0 starts the next chain."""
    return [(k * q) % p for k in range(p)]


def multichain(p: int, chains: int | None = None) -> list[int]:
    """Chains for q = 1, 2, ... joined at their shared zeros."""
    qmax = (p - 1) // 2
    count = qmax if chains is None else chains
    out = []
    for q in range(1, count + 1):
        out.extend(chain(p, q))
    return out


@dataclass
class ChainLayout:
    """Symbolic prime-chain labeling of C_n.

    ``edge_residues[i]`` is the residue a placed on edge i (label p_a);
    ``vertex_tiers[i]`` is 0 for label 1 or k for the k-th distinguishing prime.
    """

    n: int
    p: int
    copies: int
    chains: int
    leftover: int
    edge_residues: list[int]
    pre_pds: list[tuple[int, int]]
    vertex_tiers: list[int]

    @property
    def tiers_used(self) -> int:
        return max(self.vertex_tiers, default=0)


def _layout_counts(n: int, p: int) -> tuple[int, int, int]:
    per_copy = (p - 1) // 2
    chains = n // p
    leftover = n - chains * p
    copies = -(-chains // per_copy) if chains else 0
    return chains, leftover, copies


def chain_layout(n: int, p: int) -> ChainLayout:
    if p < 3 or not numtheory.is_prime(p):
        raise InvalidParameter(f"chain modulus must be an odd prime, got {p}")
    chains, t, copies = _layout_counts(n, p)
    if chains == 0:
        raise CapacityError(f"C_{n} is shorter than one chain of length {p}")
    per_copy = (p - 1) // 2
    res: list[int] = []
    for c in range(copies):
        res.extend(multichain(p, min(per_copy, chains - c * per_copy)))
    # double the last t edges of the final chain
    if t:
        tail = res[-t:]
        res[-t:] = [a for a in tail for _ in (0, 1)]
    n_ = len(res)
    assert n_ == n
    pre = [tuple(sorted((res[i - 1], res[i]))) for i in range(n_)]
    key = {}
    tiers = [0] * n_
    for i, pr in enumerate(pre):
        k = key.get(pr, 0)
        tiers[i] = k
        key[pr] = k + 1
    if max(key.values()) > copies:
        raise VerificationError("a pre-labeling product degree repeats more than once per copy")
    return ChainLayout(n, p, copies, chains, t, res, pre, tiers)


def materialize(layout: ChainLayout, edge_label: Callable[[int], int],
                vertex_label: Callable[[int], int]) -> tuple[list[int], list[int]]:
    V = [1 if k == 0 else vertex_label(k) for k in layout.vertex_tiers]
    E = [edge_label(a) for a in layout.edge_residues]
    return V, E


@dataclass
class ChainPlan:
    n: int
    s_budget: int | None
    pi_s: int | None
    p: int
    steps: tuple[int, ...]
    copies: int
    max_copies: int | None
    chains: int
    leftover: int
    substitution: dict[int, int]
    distinguishing_primes: list[int]

    @property
    def predicted_strength(self) -> int:
        return max([self.substitution[self.p - 1], *self.distinguishing_primes])

    def to_dict(self) -> dict:
        d = asdict(self)
        d["substitution"] = {str(k): v for k, v in self.substitution.items()}
        d["steps"] = list(self.steps)
        return d


def chain_prime_for_budget(s_budget: int) -> tuple[int, int, int] | None:
    """(pi(s), p, max copies) for a strength budget, or None if p < 3."""
    P = numtheory.prime_pi(s_budget)
    cap = (2 * P) // 3
    if cap < 3:
        return None
    return P, numtheory.greatest_prime_le(cap), -(-P // 3)


def plan_prime_chain(n: int, s_budget: int) -> ChainPlan:
    """Parameters of the prime-chain labeling of C_n within ``s_budget``.

    Raises CapacityError naming the least feasible budget otherwise.
    """
    plan = _try_plan(n, s_budget)
    if plan is None:
        need = minimal_chain_budget(n, start=s_budget + 1)
        raise CapacityError(
            f"budget {s_budget} cannot host C_{n}; least feasible budget is {need}"
        )
    return plan


def _try_plan(n: int, s_budget: int) -> ChainPlan | None:
    if n < 3:
        raise InvalidParameter("cycles need n >= 3")
    got = chain_prime_for_budget(s_budget)
    if got is None:
        return None
    P, p, max_copies = got
    chains, t, copies = _layout_counts(n, p)
    if chains == 0 or copies > max_copies:
        return None
    subst = {a: numtheory.nth_indexed_label(a) for a in range(p)}
    extra = numtheory.primes_after(subst[p - 1], copies - 1) if copies > 1 else []
    qs = tuple(range(1, min((p - 1) // 2, chains) + 1))
    return ChainPlan(n, s_budget, P, p, qs, copies, max_copies, chains, t, subst, extra)


def minimal_chain_budget(n: int, start: int = 2) -> int:
    s = max(start, 2)
    while _try_plan(n, s) is None:
        s += 1
    return s


def label_cycle_prime_chain(n: int, s_budget: int | None = None
                            ) -> tuple[TotalLabeling, ChainPlan]:
    """Prime-chain labeling: edges carry 1 and the first p-1 primes, repeated
    product degrees are separated by primes above every edge label."""
    if s_budget is None:
        s_budget = minimal_chain_budget(n)
    plan = plan_prime_chain(n, s_budget)
    layout = chain_layout(n, plan.p)
    if layout.tiers_used > len(plan.distinguishing_primes):
        raise VerificationError("more distinguishing primes needed than planned")
    V, E = materialize(layout, plan.substitution.__getitem__,
                       lambda k: plan.distinguishing_primes[k - 1])
    return verify(cycle_labeling(V, E), f"prime chain C_{n}"), plan


# -- dispatch --------------------------------------------------------------------

def _chain_candidates(n: int, tries: int = 4) -> list[int]:
    """Least budgets for the first few chain primes that can host C_n."""
    out, last_p = [], None
    s = minimal_chain_budget(n)
    while len(out) < tries:
        p = chain_prime_for_budget(s)[1]
        if p != last_p:
            if _try_plan(n, s) is None:
                break
            out.append(s)
            last_p = p
        s += 1
    return out


def best_chain_budget(n: int) -> int:
    plans = [_try_plan(n, s) for s in _chain_candidates(n)]
    best = min(plans, key=lambda pl: (pl.predicted_strength, pl.s_budget))
    return best.s_budget


def auto_label_cycle_with_method(n: int) -> tuple[TotalLabeling, str]:
    if n < 3:
        raise InvalidParameter("cycles need n >= 3")
    found: list[tuple[TotalLabeling, str]] = []
    if n in CYCLE_TABLE:
        found.append((label_cycle_small(n), "table"))
    if n >= 13:
        found.append((label_cycle_div4(n), "div4"))
    if n >= 7:
        found.append((label_cycle_div3(n), "div3"))
    if n >= 3:
        lab, _ = label_cycle_prime_chain(n, best_chain_budget(n))
        found.append((lab, "prime_chain"))
    return min(found, key=lambda x: x[0].strength)


def auto_label_cycle(n: int) -> TotalLabeling:
    return auto_label_cycle_with_method(n)[0]


# -- paths and Hamiltonian graphs -----------------------------------------------

def cycle_to_path(lab: TotalLabeling) -> TotalLabeling:
    """Delete the first edge labeled 1; product degrees are unchanged."""
    V, E = cycle_lists(lab)
    n = len(V)
    try:
        i = E.index(1)
    except ValueError:
        raise VerificationError("cycle labeling has no edge labeled 1") from None
    order = [(i + 1 + k) % n for k in range(n)]
    pv = [V[v] for v in order]
    pe = {(k, k + 1): E[order[k]] for k in range(n - 1)}
    return TotalLabeling(make_path(n), tuple(pv), pe)


def label_path(n: int, cycle: TotalLabeling | None = None) -> TotalLabeling:
    if n < 2:
        raise InvalidParameter("paths need n >= 2")
    if n == 2:
        return verify(TotalLabeling(make_path(2), (1, 2), {(0, 1): 1}), "P_2")
    src = auto_label_cycle(n) if cycle is None else cycle
    if src.graph.n != n:
        raise InvalidParameter("source cycle has the wrong length")
    return verify(cycle_to_path(src), f"P_{n}")


def label_hamiltonian(g: Graph, order: Sequence[int], closed: bool = True,
                      source: TotalLabeling | None = None) -> TotalLabeling:
    """Carry a cycle (or path) labeling along a Hamiltonian cycle (or path)
    of ``g``; every other edge gets label 1."""
    order = [int(v) for v in order]
    n = g.n
    if sorted(order) != list(range(n)):
        raise InvalidWitness("witness must visit every vertex exactly once")
    hops = [(order[k], order[k + 1]) for k in range(n - 1)]
    if closed:
        hops.append((order[-1], order[0]))
    for u, v in hops:
        if not g.has_edge(u, v):
            raise InvalidWitness(f"({u}, {v}) is not an edge of the graph")
    if closed and n < 3:
        raise InvalidWitness("a Hamiltonian cycle needs at least 3 vertices")
    if source is None:
        source = auto_label_cycle(n) if closed else label_path(n)
    el = {e: 1 for e in g.edges}
    for k, (u, v) in enumerate(hops):
        el[canonical_edge(u, v)] = source.edge_labels[canonical_edge(k, (k + 1) % n)]
    vl = [0] * n
    for k, v in enumerate(order):
        vl[v] = source.vertex_labels[k]
    return verify(TotalLabeling(g, tuple(vl), el), "Hamiltonian labeling")
