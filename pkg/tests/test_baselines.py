import math

import pytest

from conftest import chain, potential_graph, triangle
from jfrbench.baselines import (bellman_ford, dijkstra_oracle, spfa_fifo,
                                spfa_slf)
from jfrbench.errors import NegativeWeightPresent
from jfrbench.graph import EdgeListDoc, from_edge_list

INF = math.inf


def test_bellman_ford_triangle():
    r = bellman_ford(triangle(), 0)
    assert r.dist == [0.0, 2.0, 1.0]
    assert r.parent == [None, 0, 1]
    assert not r.neg_cycle
    s = r.stats
    assert s.mode == "bf"
    assert s.edge_inspections == 6
    assert s.successful_relaxations == 3
    assert s.outer_iterations == 2
    assert s.activations == [2, 2, 2]
    assert s.improvements == [0, 1, 2]  # vertex 2 improves via 5.0 then 1.0
    assert s.successful_relaxations == sum(s.improvements)


def test_bellman_ford_skips_unreachable_tails():
    # vertex 1 has an out-edge but stays at +inf: it must never be scanned
    g = from_edge_list(EdgeListDoc(2, [(1, 0, 1.0)]))
    r = bellman_ford(g, 0)
    assert r.dist == [0.0, INF]
    assert r.parent == [None, None]
    assert r.stats.edge_inspections == 0
    assert r.stats.outer_iterations == 1


def test_bellman_ford_chain_early_exit():
    # ascending vertex order lets one pass settle the whole chain
    r = bellman_ford(chain(5), 0)
    assert r.dist == [0.0, 1.0, 2.0, 3.0, 4.0]
    assert r.stats.outer_iterations == 2


def test_spfa_fifo_triangle():
    r = spfa_fifo(triangle(), 0)
    assert r.dist == [0.0, 2.0, 1.0]
    s = r.stats
    assert s.mode == "spfa-fifo"
    assert s.edge_inspections == 3
    assert s.queue_pushes == 3
    assert s.outer_iterations == 3  # one pop per push
    assert s.activations == [1, 1, 1]


def test_spfa_slf_triangle():
    r = spfa_slf(triangle(), 0)
    assert r.dist == [0.0, 2.0, 1.0]
    assert r.stats.mode == "spfa-slf"
    assert r.stats.edge_inspections == 3


def test_spfa_slf_front_insertion():
    # v's label beats the queued front, so v must pop first and u's edge
    # is inspected only after v already improved the shared head
    g = from_edge_list(EdgeListDoc(4, [(0, 1, 5.0), (0, 2, 1.0),
                                       (1, 3, 1.0), (2, 3, 1.0)]))
    r = spfa_slf(g, 0)
    assert r.dist == [0.0, 5.0, 1.0, 2.0]
    assert r.parent[3] == 2


def test_negative_cycle_flagged_by_all():
    g = from_edge_list(EdgeListDoc(4, [(0, 1, 1.0), (1, 2, -1.0),
                                       (2, 3, -1.0), (3, 1, 1.5)]))
    for alg in (bellman_ford, spfa_fifo, spfa_slf):
        r = alg(g, 0)
        assert r.neg_cycle, alg.__name__
        assert r.cycle_witness is not None


def test_negative_cycle_unreachable_is_ignored():
    g = from_edge_list(EdgeListDoc(4, [(0, 1, 1.0), (2, 3, -2.0),
                                       (3, 2, 1.0)]))
    for alg in (bellman_ford, spfa_fifo, spfa_slf):
        r = alg(g, 0)
        assert not r.neg_cycle
        assert r.dist[:2] == [0.0, 1.0] and r.dist[2] == INF


def test_dijkstra_rejects_negative_weights():
    with pytest.raises(NegativeWeightPresent):
        dijkstra_oracle(triangle(), 0)


def test_dijkstra_matches_bf_on_nonnegative():
    for seed in range(40):
        g = potential_graph(50, 180, seed, mixed=False)
        want = bellman_ford(g, 0)
        got = dijkstra_oracle(g, 0)
        assert got.dist == want.dist
        assert not got.neg_cycle
        assert got.stats.successful_relaxations == sum(got.stats.improvements)


def test_spfa_variants_match_bf_on_mixed_sign():
    for seed in range(300):
        g = potential_graph(20 + seed % 41, 120, seed)
        want = bellman_ford(g, 0)
        assert not want.neg_cycle
        for alg in (spfa_fifo, spfa_slf):
            got = alg(g, 0)
            assert got.dist == want.dist, (alg.__name__, seed)
            assert not got.neg_cycle


def test_stats_bookkeeping_consistency():
    for seed in range(30):
        g = potential_graph(40, 200, seed)
        for alg in (bellman_ford, spfa_fifo, spfa_slf):
            s = alg(g, 0).stats
            assert s.successful_relaxations == sum(s.improvements)
            assert len(s.activations) == len(s.improvements) == g.n
            assert s.wall_time_ns > 0


def test_source_out_of_range():
    from jfrbench.errors import IndexOutOfRange
    for alg in (bellman_ford, spfa_fifo, spfa_slf, dijkstra_oracle):
        with pytest.raises(IndexOutOfRange):
            alg(potential_graph(5, 5, 1, mixed=False), 5)
