import math

import pytest

from conftest import potential_graph, triangle
from jfrbench.baselines import bellman_ford, spfa_fifo, spfa_slf
from jfrbench.errors import NoCycleRecorded, Unreachable
from jfrbench.generators import GenSpec, gen_sparse_random, plant_negative_cycle
from jfrbench.graph import EdgeListDoc, from_edge_list
from jfrbench.jfr import jfr_pq, jfr_strict
from jfrbench.paths import cycle_weight, detect_negative_cycle, reconstruct_path


def test_reconstruct_triangle_path():
    r = bellman_ford(triangle(), 0)
    assert reconstruct_path(r, 2) == [0, 1, 2]
    assert reconstruct_path(r, 1) == [0, 1]
    assert reconstruct_path(r, 0) == [0]


def test_reconstruct_unreachable():
    g = from_edge_list(EdgeListDoc(3, [(0, 1, 1.0)]))
    r = bellman_ford(g, 0)
    with pytest.raises(Unreachable):
        reconstruct_path(r, 2)


def test_reconstruct_rejects_neg_cycle_result():
    g = from_edge_list(EdgeListDoc(2, [(0, 1, 1.0), (1, 0, -2.0)]))
    r = bellman_ford(g, 0)
    assert r.neg_cycle
    with pytest.raises(ValueError):
        reconstruct_path(r, 1)


def test_path_weights_are_consistent():
    for seed in range(30):
        g = potential_graph(40, 200, seed)
        r = bellman_ford(g, 0)
        for v in range(g.n):
            if r.dist[v] == math.inf or v == 0:
                continue
            path = reconstruct_path(r, v)
            assert path[0] == 0 and path[-1] == v
            # every consecutive pair is an edge; the parent chain is tight
            total = 0.0
            for a, b in zip(path, path[1:]):
                ws = [w for head, w in g.out_edges(a) if head == b]
                assert ws, (seed, a, b)
                total += min(ws)
            assert total <= r.dist[v] + 1e-9


def test_cycle_weight_wraparound_and_parallel_edges():
    g = from_edge_list(EdgeListDoc(3, [(0, 1, 2.0), (0, 1, 1.0),
                                       (1, 2, 3.0), (2, 0, -5.0)]))
    assert cycle_weight(g, [0, 1, 2]) == pytest.approx(-1.0)


def test_cycle_weight_missing_edge():
    g = from_edge_list(EdgeListDoc(3, [(0, 1, 2.0)]))
    with pytest.raises(RuntimeError):
        cycle_weight(g, [0, 2])


def test_detect_requires_recorded_cycle():
    r = bellman_ford(triangle(), 0)
    with pytest.raises(NoCycleRecorded):
        detect_negative_cycle(r, triangle())


def test_detect_negative_cycle_all_solvers():
    solvers = [bellman_ford, spfa_fifo, spfa_slf, jfr_pq,
               lambda g, s: jfr_strict(g, s, 2)]
    for seed in range(15):
        base = gen_sparse_random(GenSpec("sparse-random", n=40, m=150,
                                         seed=seed))
        g = plant_negative_cycle(base, 3 + seed % 4, seed=seed)
        for solve in solvers:
            r = solve(g, 0)
            assert r.neg_cycle
            cycle = detect_negative_cycle(r, g)
            assert len(cycle) >= 2
            assert len(set(cycle)) == len(cycle)  # simple cycle
            assert cycle_weight(g, cycle) < 0
