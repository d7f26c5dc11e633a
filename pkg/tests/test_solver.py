import pytest

from tvps.errors import InvalidParameter
from tvps.graphs import (Graph, make_complete, make_complete_multipartite, make_cycle,
                         make_empty, make_grid, make_path)
from tvps.labeling import CYCLE_OPTIMUM, is_product_irregular
from tvps.solver import SearchConfig, Status, exists_labeling, tvps_exact

from conftest import PETERSEN

PLAIN = SearchConfig(use_bounds=False)


def test_triangle_decisions():
    c3 = make_cycle(3)
    assert exists_labeling(c3, 1).status is Status.NO
    res = exists_labeling(c3, 2)
    assert res.status is Status.YES
    assert is_product_irregular(res.witness)[0]
    assert res.witness.strength <= 2


def test_c11_has_no_strength_three_labeling():
    assert exists_labeling(make_cycle(11), 3).status is Status.NO


@pytest.mark.parametrize("cfg", [SearchConfig(), PLAIN], ids=["bounds", "plain"])
@pytest.mark.parametrize("g,expect", [
    (make_cycle(5), 3), (make_complete(4), 2), (make_complete_multipartite([3, 3]), 3),
    (make_path(4), 2), (make_path(5), 3), (make_grid([3, 3])[0], 3),
], ids=["C5", "K4", "K33", "P4", "P5", "G3x3"])
def test_exact_values(g, expect, cfg):
    res = tvps_exact(g, cfg)
    assert res.complete and res.value == expect
    assert is_product_irregular(res.witness)[0]
    assert res.witness.strength == expect


@pytest.mark.parametrize("n", range(3, 11))
def test_small_cycles_match_table(n):
    assert tvps_exact(make_cycle(n), PLAIN).value == CYCLE_OPTIMUM[n]


def test_petersen():
    assert tvps_exact(PETERSEN).value == 3


def test_isolated_vertices():
    assert tvps_exact(make_empty(1)).value == 1
    assert tvps_exact(make_empty(3)).value == 3


def test_orders_agree():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (2, 3)])
    a = tvps_exact(g, SearchConfig(order="bfs")).value
    b = tvps_exact(g, SearchConfig(order="index", symmetry=False)).value
    assert a == b


def test_node_budget_gives_bracket():
    res = tvps_exact(make_cycle(12), SearchConfig(use_bounds=False, node_budget=500))
    assert not res.complete and res.value is None
    assert res.lower <= CYCLE_OPTIMUM[12] <= res.upper
    assert res.log[-1][1] == Status.BUDGET.value


def test_budget_status():
    out = exists_labeling(make_cycle(12), 3, SearchConfig(use_bounds=False, node_budget=50))
    assert out.status is Status.BUDGET and out.witness is None


def test_config_validation():
    with pytest.raises(InvalidParameter):
        SearchConfig(node_budget=0)
    with pytest.raises(InvalidParameter):
        SearchConfig(order="dfs")
    with pytest.raises(InvalidParameter):
        exists_labeling(make_cycle(3), 0)
