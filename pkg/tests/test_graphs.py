import math

import pytest
from hypothesis import given, settings, strategies as st

from tvps.errors import InvalidParameter
from tvps.graphs import (Graph, VertexIndexer, cartesian_product, make_complete,
                         make_complete_multipartite, make_cycle, make_grid, make_path,
                         make_torus, parse_family_spec)

from conftest import small_graphs


def test_cycle_smallest():
    g = make_cycle(3)
    assert g.n == 3
    assert set(g.edges) == {(0, 1), (1, 2), (0, 2)}
    assert g.family == "cycle"


def test_cycle_two_regular():
    g = make_cycle(5)
    assert g.m == 5
    assert g.degrees == (2,) * 5


def test_cycle_too_short():
    with pytest.raises(InvalidParameter):
        make_cycle(2)


def test_path():
    assert make_path(2).edges == ((0, 1),)
    assert make_path(4).degrees == (1, 2, 2, 1)
    with pytest.raises(InvalidParameter):
        make_path(1)


def test_multipartite():
    k33 = make_complete_multipartite([3, 3])
    assert (k33.n, k33.m) == (6, 9)
    assert set(make_complete_multipartite([1, 1, 1]).edges) == set(make_cycle(3).edges)
    g = make_complete_multipartite([2, 3, 4])
    # a vertex of the 2-block sees 3 + 4 others
    assert g.max_degree == 7
    assert g.degree(0) == 7
    with pytest.raises(InvalidParameter):
        make_complete_multipartite([4])


def test_product_of_triangles():
    g, ix = cartesian_product([make_cycle(3), make_cycle(3)])
    assert (g.n, g.m) == (9, 18)
    assert g.degrees == (4,) * 9
    assert g.family == "toroidal_grid"


def test_two_by_two_grid_is_four_cycle():
    g, _ = make_grid([2, 2])
    assert g.degrees == (2,) * 4 and g.m == 4
    # 0-1-3-2-0 in row-major order
    assert set(g.edges) == {(0, 1), (1, 3), (2, 3), (0, 2)}


def test_single_factor_identity():
    c5 = make_cycle(5)
    g, ix = cartesian_product([c5])
    assert g == c5
    assert ix.dims == (5,)


def test_empty_factor_list():
    with pytest.raises(InvalidParameter):
        cartesian_product([])


def test_no_loops_or_duplicates():
    with pytest.raises(InvalidParameter):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(InvalidParameter):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(InvalidParameter):
        Graph.from_edges(3, [(0, 3)])


@given(st.lists(st.integers(1, 4), min_size=1, max_size=3), st.data())
@settings(max_examples=40, deadline=None)
def test_product_edge_count_and_degrees(sizes, data):
    factors = [data.draw(small_graphs(max_n=s)) for s in sizes]
    g, ix = cartesian_product(factors)
    ns = [f.n for f in factors]
    expect = sum(f.m * math.prod(ns[:j] + ns[j + 1:]) for j, f in enumerate(factors))
    assert g.m == expect
    for v in range(g.n):
        c = ix.coords(v)
        assert g.degree(v) == sum(f.degree(cj) for f, cj in zip(factors, c))


@given(st.lists(st.integers(1, 6), min_size=1, max_size=4), st.data())
def test_indexer_round_trip(dims, data):
    ix = VertexIndexer(tuple(dims))
    coords = tuple(data.draw(st.integers(0, d - 1)) for d in dims)
    assert ix.coords(ix.index(coords)) == coords
    assert sorted(ix.index(ix.coords(i)) for i in range(ix.size)) == list(range(ix.size))


def test_indexer_row_major():
    ix = VertexIndexer((3, 4))
    assert ix.index((1, 2)) == 6
    assert ix.coords(11) == (2, 3)


@given(small_graphs())
def test_degree_sum(g):
    assert sum(d * c for d, c in g.degree_counts.items()) == 2 * g.m


def test_generators_deterministic():
    assert make_torus([3, 4]) == make_torus([3, 4])
    assert make_complete(6).edges == make_complete(6).edges


@given(small_graphs())
def test_json_round_trip(g):
    assert Graph.from_json(g.to_json()) == g


def test_json_layout():
    d = make_cycle(3).to_dict()
    assert d == {"n": 3, "edges": [[0, 1], [0, 2], [1, 2]],
                 "family": {"tag": "cycle", "params": [3]}}


def test_dot_export():
    dot = make_path(3).to_dot()
    assert dot.startswith("graph G {") and "0 -- 1;" in dot and "1 -- 2;" in dot


@pytest.mark.parametrize("spec,n,m", [
    ("cycle:5", 5, 5), ("path:4", 4, 3), ("grid:3,4", 12, 17), ("torus:3,3", 9, 18),
    ("complete:5", 5, 10), ("multipartite:3,3", 6, 9),
])
def test_parse_family_spec(spec, n, m):
    g = parse_family_spec(spec)
    assert (g.n, g.m) == (n, m)


@pytest.mark.parametrize("spec", ["cycle", "wheel:5", "cycle:x", "cycle:2", "path:1,2"])
def test_parse_family_spec_rejects(spec):
    with pytest.raises(InvalidParameter):
        parse_family_spec(spec)
