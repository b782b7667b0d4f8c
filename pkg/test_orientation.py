#!/usr/bin/env python3
"""
Tests for the orientation strategies and the arboricity estimate
"""

import math

import networkx as nx
import numpy as np
import pytest

from demo_data import (
    complete_graph,
    gnp_graph,
    path_graph,
    random_graph_suite,
    random_tree,
    star_graph,
)
from errors import InvalidArgumentError
from graph_core import Graph, direct_by_ranking
from oracle import exact_arboricity, exact_densest, reference_degeneracy
from orientation import (
    OrientConfig,
    degeneracy,
    estimate_arboricity,
    load_ranking,
    orient,
    rank_barenboim_elkin,
    rank_by_degree,
    rank_by_kcore,
    rank_goodrich_pszona,
    rank_original,
    save_ranking,
)

SMALL_SUITE = random_graph_suite(100, 16, seed=4)


def _max_out(g, r):
    return direct_by_ranking(g, r).max_out_degree


def _to_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@pytest.mark.parametrize("strategy", ["degree", "original", "kcore", "goodrich_pszona", "barenboim_elkin"])
def test_every_strategy_is_a_deterministic_bijection(strategy):
    for g in random_graph_suite(15, 30, seed=9):
        first = orient(g, OrientConfig(strategy))
        second = orient(g, OrientConfig(strategy))
        assert sorted(first.rank.tolist()) == list(range(g.n))
        assert np.array_equal(first.rank, second.rank)


def test_orient_config_validation():
    with pytest.raises(InvalidArgumentError):
        OrientConfig("approx_degree")
    with pytest.raises(InvalidArgumentError):
        OrientConfig("degree", epsilon=0)
    with pytest.raises(InvalidArgumentError):
        OrientConfig("barenboim_elkin", alpha_hat=0)


def test_goodrich_pszona_complete_graph():
    g = complete_graph(4)
    r = rank_goodrich_pszona(g, 1.0)
    assert r.rounds == 4
    out = direct_by_ranking(g, r).out_degrees
    assert sorted(out.tolist()) == [0, 1, 2, 3]
    assert out.max() <= 3 * 2


def test_goodrich_pszona_tree():
    assert _max_out(random_tree(10, seed=3), rank_goodrich_pszona(random_tree(10, seed=3), 1.0)) <= 3


def test_goodrich_pszona_bounds_on_small_graphs():
    for g in SMALL_SUITE:
        alpha = exact_arboricity(g)
        r = rank_goodrich_pszona(g, 1.0)
        assert _max_out(g, r) <= 3 * alpha
        assert r.rounds <= math.ceil(math.log(g.n, 1.5)) + 1


def test_goodrich_pszona_round_bound_for_other_epsilons():
    for eps in (0.5, 2.0):
        for g in random_graph_suite(10, 40, seed=12):
            r = rank_goodrich_pszona(g, eps)
            assert r.rounds <= math.ceil(math.log(g.n, (2 + eps) / 2)) + 1


def test_barenboim_elkin_complete_graph_single_round():
    r = rank_barenboim_elkin(complete_graph(4), 1.0, alpha_hat=2)
    assert r.rounds == 1
    assert r.order.tolist() == [0, 1, 2, 3]


def test_barenboim_elkin_star():
    g = star_graph(9)
    r = rank_barenboim_elkin(g, 1.0, alpha_hat=1)
    assert r.rounds == 2
    assert r.rank[0] == g.n - 1
    assert direct_by_ranking(g, r).out_degrees[0] == 0


def test_barenboim_elkin_bounds_with_exact_arboricity():
    for g in SMALL_SUITE:
        alpha = max(1, exact_arboricity(g))
        r = rank_barenboim_elkin(g, 1.0, alpha_hat=alpha)
        assert _max_out(g, r) < 3 * alpha


def test_barenboim_elkin_recovers_from_underestimate():
    g = complete_graph(8)
    r = rank_barenboim_elkin(g, 1.0, alpha_hat=1)
    assert sorted(r.rank.tolist()) == list(range(8))


def test_barenboim_elkin_defaults_to_estimate():
    g = gnp_graph(30, 0.3, seed=1)
    assert np.array_equal(
        rank_barenboim_elkin(g, 1.0).rank,
        rank_barenboim_elkin(g, 1.0, estimate_arboricity(g, 1.0)).rank,
    )


def test_degree_order_path():
    r = rank_by_degree(path_graph(3))
    assert r.rank[0] < r.rank[1] and r.rank[2] < r.rank[1]


def test_degree_order_ties_by_id():
    assert rank_by_degree(complete_graph(6)).rank.tolist() == list(range(6))


def test_degree_order_points_to_weakly_higher_degree():
    g = gnp_graph(30, 0.2, seed=8)
    dg = direct_by_ranking(g, rank_by_degree(g))
    degrees = g.degrees
    for v in range(g.n):
        assert np.all(degrees[dg.out_of(v)] >= degrees[v])


def test_kcore_tree_and_complete():
    assert _max_out(random_tree(12, seed=5), rank_by_kcore(random_tree(12, seed=5))) <= 1
    out = direct_by_ranking(complete_graph(5), rank_by_kcore(complete_graph(5))).out_degrees
    assert sorted(out.tolist()) == [0, 1, 2, 3, 4]


def test_kcore_out_degree_is_degeneracy():
    for g in random_graph_suite(30, 30, seed=6):
        expected = reference_degeneracy(g)
        assert degeneracy(g) == expected
        assert expected == max(nx.core_number(_to_networkx(g)).values(), default=0)


def test_original_order():
    g = gnp_graph(10, 0.5, seed=2)
    assert rank_original(g).rank.tolist() == list(range(10))
    assert direct_by_ranking(complete_graph(3), rank_original(complete_graph(3))).out_degrees.tolist() == [2, 1, 0]
    assert len(rank_original(Graph.empty())) == 0


def test_estimate_arboricity_forest_and_complete():
    assert estimate_arboricity(random_tree(20, seed=1), 1.0) == 1
    assert estimate_arboricity(star_graph(9), 1.0) == 1
    assert estimate_arboricity(complete_graph(5), 1.0) in (2, 3)
    assert estimate_arboricity(Graph.empty(), 1.0) == 1


def test_estimate_arboricity_is_bracketed_by_oracle():
    eps = 1.0
    for g in SMALL_SUITE:
        if g.m == 0:
            continue
        estimate = estimate_arboricity(g, eps)
        densest, _ = exact_densest(g, 2)
        assert estimate <= exact_arboricity(g)
        assert estimate >= math.ceil(densest / (2 * (1 + eps)) - 1e-9)


def test_ranking_file_round_trip(tmp_path):
    g = gnp_graph(12, 0.4, seed=3)
    r = rank_by_kcore(g)
    path = save_ranking(r, tmp_path / "ranking.txt")
    assert np.array_equal(load_ranking(path).rank, r.rank)


def main():
    """Run all tests"""
    raise SystemExit(pytest.main([__file__, "-q"]))


if __name__ == "__main__":
    main()
