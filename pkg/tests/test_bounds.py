import math
import random
from itertools import combinations_with_replacement

import pytest
from hypothesis import given, settings, strategies as st

from tvps.bounds import (MAX_ENUM_DEGREE, best_lower_bound, bound_report,
                         count_distinct_products, counting_lower_bound,
                         cycle_cuberoot_lower_bound, exact_multiset_lower_bound,
                         greedy_upper_labeling, icbrt_ceil, multipartite_lower_bound,
                         pooled_multiset_lower_bound, regular_lower_bound)
from tvps.errors import EnumerationRefused, InvalidParameter
from tvps.graphs import (Graph, make_complete, make_complete_multipartite, make_cycle,
                         make_empty, make_path, make_torus)
from tvps.labeling import is_product_irregular, strength

from conftest import random_graph, small_graphs


def float_counting_bound(g):
    vals = [math.ceil((d + 1) / math.e * c ** (1 / (d + 1)) - d)
            for d, c in g.degree_counts.items()]
    return max([1, *vals])


def brute_products(s, k):
    return {math.prod(c) for c in combinations_with_replacement(range(1, s + 1), k)}


@pytest.mark.parametrize("n,expect", [(216, 5), (1000, 10)])
def test_counting_two_regular(n, expect):
    # 3/e * 6 - 2 = 4.62 and 3/e * 10 - 2 = 9.04
    g = make_cycle(n)
    assert counting_lower_bound(g) == expect
    assert regular_lower_bound(g) == expect
    assert float_counting_bound(g) == expect


@given(small_graphs())
def test_counting_matches_float_oracle(g):
    assert counting_lower_bound(g) == float_counting_bound(g)


def test_regular_only_for_regular():
    with pytest.raises(InvalidParameter):
        regular_lower_bound(make_path(4))


@pytest.mark.parametrize("s,k,expect", [(2, 3, 4), (3, 3, 10), (4, 3, 16)])
def test_distinct_product_counts(s, k, expect):
    assert count_distinct_products(s, k) == expect
    assert len(brute_products(s, k)) == expect


@given(st.integers(1, 9), st.integers(0, 5))
@settings(max_examples=60)
def test_distinct_products_vs_brute_force(s, k):
    got = count_distinct_products(s, k)
    assert got == len(brute_products(s, k))
    assert got <= math.comb(s + k - 1, k)


@pytest.mark.parametrize("n,expect", [(3, 2), (5, 3), (11, 4), (17, 5)])
def test_exact_multiset_cycles(n, expect):
    assert exact_multiset_lower_bound(make_cycle(n)) == expect


def test_exact_multiset_refuses_high_degree():
    with pytest.raises(EnumerationRefused):
        exact_multiset_lower_bound(make_complete(MAX_ENUM_DEGREE + 2))
    with pytest.raises(EnumerationRefused):
        pooled_multiset_lower_bound(make_complete(MAX_ENUM_DEGREE + 2))


def test_pooled_dominates_per_class():
    rng = random.Random(7)
    for _ in range(40):
        g = random_graph(rng, rng.randint(2, 12), 0.4)
        if g.max_degree <= MAX_ENUM_DEGREE:
            assert pooled_multiset_lower_bound(g) >= exact_multiset_lower_bound(g)


def test_pooled_sees_shared_products():
    # two isolated and two degree-1 vertices share the pds {1, 2, 4} at s = 2
    g = Graph.from_edges(4, [(0, 1)])
    assert exact_multiset_lower_bound(g) == 2
    assert pooled_multiset_lower_bound(g) == 3


def cuberoot_oracle(n):
    s = 0
    while (s + 1) ** 3 < 6 * n:
        s += 1
    return s


@pytest.mark.parametrize("n,expect", [(3, 2), (36, 5), (100, 8)])
def test_cuberoot_examples(n, expect):
    assert cycle_cuberoot_lower_bound(n) == expect
    assert cuberoot_oracle(n) == expect


@given(st.integers(3, 10**6))
def test_cuberoot_oracle(n):
    assert cycle_cuberoot_lower_bound(n) == cuberoot_oracle(n)


@given(st.integers(0, 10**40))
def test_icbrt_ceil(x):
    c = icbrt_ceil(x)
    assert c**3 >= x and (c == 0 or (c - 1) ** 3 < x)


@pytest.mark.parametrize("parts,expect", [([3, 3], 3), ([3, 4, 5], 3), ([1, 1], 2), ([2, 5], 2)])
def test_multipartite(parts, expect):
    assert multipartite_lower_bound(parts) == expect


def test_multipartite_invalid():
    with pytest.raises(InvalidParameter):
        multipartite_lower_bound([3])


def test_greedy_examples():
    lab = greedy_upper_labeling(make_path(3))
    assert lab.vertex_labels == (1, 2, 3)
    assert greedy_upper_labeling(make_empty(4)).vertex_labels == (1, 2, 3, 4)
    assert strength(greedy_upper_labeling(make_complete(3))) == 3


@given(small_graphs(), st.data())
def test_greedy_property(g, data):
    el = {e: data.draw(st.integers(1, 5)) for e in g.edges}
    lab = greedy_upper_labeling(g, el)
    assert is_product_irregular(lab)[0]
    assert strength(lab) <= max([g.n, *el.values()])


@pytest.mark.parametrize("g", [make_cycle(20), make_path(9), make_complete(6),
                               make_torus([3, 3])[0], make_complete_multipartite([3, 4])],
                         ids=lambda g: g.family)
def test_report_consistent(g):
    rep = bound_report(g)
    assert rep.best_lower <= rep.best_upper
    assert rep.best_lower == best_lower_bound(g)
    d = rep.to_dict()
    assert {"bounds", "best_lower", "best_upper"} <= d.keys()
    assert all(b["ref"] for b in d["bounds"])


def test_report_cycle_twenty_is_tight():
    rep = bound_report(make_cycle(20))
    assert rep.best_lower == rep.best_upper == 5
