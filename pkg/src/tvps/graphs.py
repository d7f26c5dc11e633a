"""Simple undirected graphs, the families used throughout the package,
and Cartesian products of graphs.

Vertices are the integers ``0..n-1``; an edge is stored as ``(min, max)``.
"""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product as iproduct
from typing import Iterable, Sequence

from .errors import InvalidParameter

FAMILIES = (
    "cycle",
    "path",
    "grid",
    "toroidal_grid",
    "complete",
    "complete_multipartite",
    "generic",
)


def canonical_edge(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: tuple[tuple[int, int], ...]
    family: str = "generic"
    params: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise InvalidParameter(f"vertex count must be non-negative, got {self.n}")
        if self.family not in FAMILIES:
            raise InvalidParameter(f"unknown family tag {self.family!r}")
        canon = set()
        for u, v in self.edges:
            if u == v:
                raise InvalidParameter(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InvalidParameter(f"edge ({u}, {v}) out of range for n={self.n}")
            e = canonical_edge(u, v)
            if e in canon:
                raise InvalidParameter(f"duplicate edge {e}")
            canon.add(e)
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        object.__setattr__(self, "params", tuple(self.params))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]], family="generic", params=()):
        return cls(n, tuple((int(u), int(v)) for u, v in edges), family, tuple(params))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def incident_edges(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        inc: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for e in self.edges:
            inc[e[0]].append(e)
            inc[e[1]].append(e)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return canonical_edge(u, v) in self.edge_set

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @cached_property
    def degree_counts(self) -> dict[int, int]:
        """``n_d``: number of vertices of each degree present."""
        return dict(sorted(Counter(self.degrees).items()))

    @property
    def min_degree(self) -> int:
        return min(self.degrees) if self.n else 0

    @property
    def max_degree(self) -> int:
        return max(self.degrees) if self.n else 0

    def is_regular(self) -> bool:
        return self.n > 0 and self.min_degree == self.max_degree

    # -- serialization -------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "edges": [list(e) for e in self.edges],
            "family": {"tag": self.family, "params": list(self.params)},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Graph":
        fam = data.get("family") or {}
        return cls.from_edges(
            int(data["n"]),
            data.get("edges", []),
            fam.get("tag", "generic"),
            tuple(fam.get("params", ())),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        return cls.from_dict(json.loads(text))

    def to_dot(self, name: str = "G", vertex_labels=None, edge_labels=None) -> str:
        lines = [f"graph {name} {{"]
        for v in range(self.n):
            if vertex_labels is not None:
                lines.append(f'  {v} [label="{v}:{vertex_labels[v]}"];')
            else:
                lines.append(f"  {v};")
        for u, v in self.edges:
            if edge_labels is not None:
                lines.append(f'  {u} -- {v} [label="{edge_labels[(u, v)]}"];')
            else:
                lines.append(f"  {u} -- {v};")
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class VertexIndexer:
    """Row-major mixed-radix map between coordinate tuples and flat indices.

    Dimension 0 is the most significant digit.
    """

    dims: tuple[int, ...]
    _strides: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(self.dims))
        strides = []
        acc = 1
        for d in reversed(self.dims):
            strides.append(acc)
            acc *= d
        object.__setattr__(self, "_strides", tuple(reversed(strides)))

    @property
    def size(self) -> int:
        return math.prod(self.dims)

    def index(self, coords: Sequence[int]) -> int:
        if len(coords) != len(self.dims):
            raise InvalidParameter("coordinate arity mismatch")
        idx = 0
        for c, d, s in zip(coords, self.dims, self._strides):
            if not 0 <= c < d:
                raise InvalidParameter(f"coordinate {c} out of range for dimension size {d}")
            idx += c * s
        return idx

    def coords(self, index: int) -> tuple[int, ...]:
        if not 0 <= index < self.size:
            raise InvalidParameter(f"index {index} out of range")
        out = []
        for s in self._strides:
            c, index = divmod(index, s)
            out.append(c)
        return tuple(out)


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidParameter(f"a cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)), "cycle", (n,))


def make_path(n: int) -> Graph:
    if n < 2:
        raise InvalidParameter(f"a path needs at least 2 vertices, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)), "path", (n,))


def make_complete(n: int) -> Graph:
    if n < 1:
        raise InvalidParameter(f"complete graph needs at least 1 vertex, got {n}")
    return Graph.from_edges(
        n, ((u, v) for u in range(n) for v in range(u + 1, n)), "complete", (n,)
    )


def make_empty(n: int) -> Graph:
    return Graph(n, (), "generic", ())


def make_complete_multipartite(parts: Sequence[int]) -> Graph:
    parts = [int(m) for m in parts]
    if len(parts) < 2:
        raise InvalidParameter("a complete multipartite graph needs at least 2 parts")
    if any(m < 1 for m in parts):
        raise InvalidParameter("every part needs at least one vertex")
    block = []
    for b, m in enumerate(parts):
        block.extend([b] * m)
    n = len(block)
    edges = ((u, v) for u in range(n) for v in range(u + 1, n) if block[u] != block[v])
    return Graph.from_edges(n, edges, "complete_multipartite", tuple(parts))


def cartesian_product(factors: Sequence[Graph]) -> tuple[Graph, VertexIndexer]:
    """Cartesian product; composite vertices differ in exactly one coordinate."""
    if not factors:
        raise InvalidParameter("cartesian product of an empty factor list")
    if any(f.n == 0 for f in factors):
        raise InvalidParameter("every factor must have at least one vertex")
    if len(factors) == 1:
        f = factors[0]
        return f, VertexIndexer((f.n,))
    ix = VertexIndexer(tuple(f.n for f in factors))
    edges = []
    for j, f in enumerate(factors):
        others = [range(g.n) for i, g in enumerate(factors) if i != j]
        for rest in iproduct(*others):
            for a, b in f.edges:
                cu = rest[:j] + (a,) + rest[j:]
                cv = rest[:j] + (b,) + rest[j:]
                edges.append((ix.index(cu), ix.index(cv)))
    family, params = "generic", ()
    if all(f.family == "cycle" for f in factors):
        family, params = "toroidal_grid", ix.dims
    elif all(f.family == "path" for f in factors):
        family, params = "grid", ix.dims
    return Graph.from_edges(ix.size, edges, family, params), ix


def make_grid(dims: Sequence[int]) -> tuple[Graph, VertexIndexer]:
    return cartesian_product([make_path(d) for d in dims])


def make_torus(dims: Sequence[int]) -> tuple[Graph, VertexIndexer]:
    return cartesian_product([make_cycle(d) for d in dims])


def parse_family_spec(spec: str) -> Graph:
    """Build a graph from ``family:params``, e.g. ``cycle:5`` or ``torus:3,3``."""
    try:
        name, _, rest = spec.partition(":")
        args = [int(x) for x in rest.split(",") if x.strip()]
    except ValueError as exc:
        raise InvalidParameter(f"bad family spec {spec!r}") from exc
    name = name.strip().lower()
    if not args:
        raise InvalidParameter(f"family spec {spec!r} has no parameters")
    single = {"cycle": make_cycle, "path": make_path, "complete": make_complete, "empty": make_empty}
    if name in single:
        if len(args) != 1:
            raise InvalidParameter(f"{name} takes exactly one parameter")
        return single[name](args[0])
    if name == "grid":
        return make_grid(args)[0]
    if name in ("torus", "toroidal_grid"):
        return make_torus(args)[0]
    if name in ("multipartite", "complete_multipartite"):
        return make_complete_multipartite(args)
    raise InvalidParameter(f"unknown graph family {name!r}")
