"""Total labelings, product degrees and the irregularity check."""

from __future__ import annotations

import json
import math
from collections import defaultdict
from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import InvalidParameter, MalformedLabeling, VerificationError
from .graphs import Graph, canonical_edge, make_cycle


@dataclass(frozen=True)
class TotalLabeling:
    """Positive integer labels on every vertex and every edge of ``graph``.

    Treat instances as immutable; ``edge_labels`` is keyed by canonical edge.
    """

    graph: Graph
    vertex_labels: tuple[int, ...]
    edge_labels: Mapping[tuple[int, int], int]

    def __post_init__(self):
        g = self.graph
        vl = tuple(int(x) for x in self.vertex_labels)
        if len(vl) != g.n:
            raise MalformedLabeling(f"expected {g.n} vertex labels, got {len(vl)}")
        if any(x < 1 for x in vl):
            raise MalformedLabeling("vertex labels must be positive")
        el = {canonical_edge(u, v): int(w) for (u, v), w in self.edge_labels.items()}
        if len(el) != g.m or any(e not in el for e in g.edges):
            raise MalformedLabeling("edge labels must cover exactly the edges of the graph")
        if any(w < 1 for w in el.values()):
            raise MalformedLabeling("edge labels must be positive")
        object.__setattr__(self, "vertex_labels", vl)
        object.__setattr__(self, "edge_labels", el)

    @property
    def strength(self) -> int:
        return strength(self)

    def with_graph(self, graph: Graph) -> "TotalLabeling":
        return TotalLabeling(graph, self.vertex_labels, self.edge_labels)

    # -- serialization -------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "vertex_labels": list(self.vertex_labels),
            "edge_labels": [
                {"u": u, "v": v, "w": self.edge_labels[(u, v)]} for u, v in self.graph.edges
            ],
        }

    @classmethod
    def from_dict(cls, graph: Graph, data: dict) -> "TotalLabeling":
        el = {}
        for item in data.get("edge_labels", []):
            e = canonical_edge(int(item["u"]), int(item["v"]))
            if e in el:
                raise MalformedLabeling(f"edge {e} labeled twice")
            el[e] = int(item["w"])
        return cls(graph, tuple(data["vertex_labels"]), el)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def product_degrees(lab: TotalLabeling) -> tuple[int, ...]:
    """pd(v) = w(v) times the labels of all edges at v (exact integers)."""
    pd = list(lab.vertex_labels)
    for (u, v), w in lab.edge_labels.items():
        pd[u] *= w
        pd[v] *= w
    return tuple(pd)


def collision_groups(pds: Sequence[int]) -> list[list[int]]:
    """Groups of vertices sharing a product degree, sorted by pd value."""
    by_pd: dict[int, list[int]] = defaultdict(list)
    for v, x in enumerate(pds):
        by_pd[x].append(v)
    return [by_pd[x] for x in sorted(by_pd) if len(by_pd[x]) > 1]


def is_product_irregular(lab: TotalLabeling) -> tuple[bool, tuple[int, int] | None]:
    """Return ``(True, None)`` or ``(False, (u, v))`` for the
    lexicographically first pair of vertices with equal product degree."""
    pds = product_degrees(lab)
    if len(set(pds)) == len(pds):
        return True, None
    groups = collision_groups(pds)
    return False, min((g[0], g[1]) for g in groups)


def verify(lab: TotalLabeling, what: str = "labeling") -> TotalLabeling:
    ok, pair = is_product_irregular(lab)
    if not ok:
        pds = product_degrees(lab)
        u, v = pair
        raise VerificationError(f"{what}: vertices {u} and {v} share product degree {pds[u]}")
    return lab


def strength(lab: TotalLabeling) -> int:
    return max([*lab.vertex_labels, *lab.edge_labels.values()], default=0)


def all_ones(graph: Graph) -> TotalLabeling:
    return TotalLabeling(graph, (1,) * graph.n, {e: 1 for e in graph.edges})


def degree_conservation_holds(lab: TotalLabeling) -> bool:
    """prod pd(v) == prod w(v) * prod w(e)**2."""
    lhs = math.prod(product_degrees(lab))
    rhs = math.prod(lab.vertex_labels) * math.prod(w * w for w in lab.edge_labels.values())
    return lhs == rhs


# -- cycle sequences -----------------------------------------------------
#
# A cycle sequence lists [w(v1)], w(v1 v2), [w(v2)], ..., [w(vn)], w(vn v1);
# vertex i of C_n sits at position 2i and edge (i, i+1 mod n) at 2i + 1.

CYCLE_TABLE: dict[int, tuple[int, ...]] = {
    3: (1, 1, 2, 2, 2, 2),
    4: (1, 1, 1, 1, 2, 2, 2, 2),
    5: (1, 1, 2, 2, 3, 3, 3, 3, 2, 2),
    6: (1, 1, 1, 1, 2, 2, 3, 3, 3, 3, 2, 2),
    7: (1, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 2, 2, 1),
    8: (1, 1, 3, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 2, 2, 1),
    9: (1, 1, 1, 3, 2, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 2, 2, 1),
    10: (1, 1, 1, 3, 1, 3, 2, 1, 1, 2, 2, 2, 2, 3, 3, 3, 3, 2, 2, 1),
    11: (1, 3, 1, 3, 1, 1, 1, 1, 1, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 3, 3, 2),
    12: (1, 3, 1, 3, 1, 1, 4, 1, 1, 1, 1, 2, 2, 3, 3, 3, 3, 4, 4, 4, 4, 3, 3, 2),
    13: (4, 1, 2, 1, 2, 3, 4, 2, 4, 2, 3, 3, 1, 3, 4, 4, 2, 4, 4, 4, 3, 3, 3, 3, 2, 2),
    14: (4, 1, 2, 1, 4, 1, 2, 3, 4, 2, 4, 2, 3, 3, 1, 3, 4, 4, 2, 4, 4, 4, 3, 3, 3, 3,
         2, 2),
    15: (4, 1, 2, 1, 3, 1, 4, 1, 2, 3, 4, 2, 4, 2, 3, 3, 1, 3, 4, 4, 2, 4, 4, 4, 3, 3,
         3, 3, 2, 2),
    16: (4, 1, 2, 1, 1, 1, 3, 1, 4, 1, 2, 3, 4, 2, 4, 2, 3, 3, 1, 3, 4, 4, 2, 4, 4, 4,
         3, 3, 3, 3, 2, 2),
}

# Optimal strengths for C_3..C_16.
CYCLE_OPTIMUM = {n: 2 if n <= 4 else 3 if n <= 10 else 4 for n in range(3, 17)}


def cycle_labeling(vertex_labels: Sequence[int], edge_labels: Sequence[int],
                   graph: Graph | None = None) -> TotalLabeling:
    """Labeling of C_n where ``edge_labels[i]`` sits on edge (i, i+1 mod n)."""
    n = len(vertex_labels)
    if len(edge_labels) != n:
        raise MalformedLabeling("a cycle has as many edges as vertices")
    g = graph if graph is not None else make_cycle(n)
    el = {canonical_edge(i, (i + 1) % n): w for i, w in enumerate(edge_labels)}
    return TotalLabeling(g, tuple(vertex_labels), el)


def decode_cycle_sequence(seq: Sequence[int]) -> TotalLabeling:
    if len(seq) % 2 or len(seq) < 6:
        raise MalformedLabeling("a cycle sequence alternates vertex/edge labels, length 2n >= 6")
    return cycle_labeling(seq[0::2], seq[1::2])


def encode_cycle_sequence(lab: TotalLabeling) -> tuple[int, ...]:
    n = lab.graph.n
    out = []
    for i in range(n):
        out.append(lab.vertex_labels[i])
        out.append(lab.edge_labels[canonical_edge(i, (i + 1) % n)])
    return tuple(out)


def builtin_cycle_sequence(n: int) -> TotalLabeling:
    if n not in CYCLE_TABLE:
        raise InvalidParameter(f"built-in sequences cover 3 <= n <= 16, got {n}")
    return decode_cycle_sequence(CYCLE_TABLE[n])
