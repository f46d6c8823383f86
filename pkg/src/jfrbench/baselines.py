"""Classical single-source shortest-path baselines.

All solvers share the relaxation convention: strict ``<`` with no epsilon,
first writer wins on ties, distances start at ``inf`` except the source.
Negative-cycle handling differs by family: Bellman-Ford flags an n-th pass
that still improves, the queue-based solvers flag a vertex improved ``n``
times (a simple-path distance can improve at most ``n - 1`` times).
"""

import heapq
import math
import time
from collections import deque

from .errors import IndexOutOfRange, NegativeWeightPresent
from .graph import Graph
from .results import RunStats, SsspResult

INF = math.inf


def check_source(g: Graph, source: int) -> None:
    if not 0 <= source < g.n:
        raise IndexOutOfRange(f"source {source} not in [0, {g.n})")


def bellman_ford(g: Graph, source: int) -> SsspResult:
    """Reference solver: full edge passes in CSR order with early exit."""
    check_source(g, source)
    n = g.n
    offsets, targets, weights = g.offsets, g.targets, g.weights
    dist = [INF] * n
    parent: list = [None] * n
    activations = [0] * n
    improvements = [0] * n
    dist[source] = 0.0
    inspections = 0
    neg_cycle = False
    witness = None
    passes = 0
    t0 = time.perf_counter_ns()
    for pass_no in range(n):
        improved_any = False
        last_pass = pass_no == n - 1
        for u in range(n):
            du = dist[u]
            if du == INF:
                continue
            activations[u] += 1
            for e in range(offsets[u], offsets[u + 1]):
                inspections += 1
                cand = du + weights[e]
                v = targets[e]
                if cand < dist[v]:
                    dist[v] = cand
                    parent[v] = u
                    improvements[v] += 1
                    improved_any = True
                    if last_pass:
                        neg_cycle = True
                        witness = v
        passes += 1
        if not improved_any or neg_cycle:
            break
    wall = time.perf_counter_ns() - t0
    stats = RunStats(
        mode="bf",
        edge_inspections=inspections,
        successful_relaxations=sum(improvements),
        outer_iterations=passes,
        activations=activations,
        improvements=improvements,
        wall_time_ns=wall,
    )
    return SsspResult(dist, parent, neg_cycle, stats, cycle_witness=witness)


def _spfa(g: Graph, source: int, slf: bool, mode: str) -> SsspResult:
    check_source(g, source)
    n = g.n
    offsets, targets, weights = g.offsets, g.targets, g.weights
    dist = [INF] * n
    parent: list = [None] * n
    activations = [0] * n
    improvements = [0] * n
    in_queue = [False] * n
    dist[source] = 0.0
    dq = deque([source])
    in_queue[source] = True
    activations[source] = 1
    inspections = 0
    pushes = 1
    pops = 0
    neg_cycle = False
    witness = None
    t0 = time.perf_counter_ns()
    while dq:
        u = dq.popleft()
        in_queue[u] = False
        pops += 1
        du = dist[u]
        for e in range(offsets[u], offsets[u + 1]):
            inspections += 1
            cand = du + weights[e]
            v = targets[e]
            if cand < dist[v]:
                dist[v] = cand
                parent[v] = u
                improvements[v] += 1
                if improvements[v] >= n:
                    neg_cycle = True
                    witness = v
                    break
                if not in_queue[v]:
                    in_queue[v] = True
                    activations[v] += 1
                    pushes += 1
                    # smallest-label-first: jump the line when we beat the
                    # label at the head of the deque
                    if slf and dq and cand < dist[dq[0]]:
                        dq.appendleft(v)
                    else:
                        dq.append(v)
        if neg_cycle:
            break
    wall = time.perf_counter_ns() - t0
    stats = RunStats(
        mode=mode,
        edge_inspections=inspections,
        successful_relaxations=sum(improvements),
        queue_pushes=pushes,
        outer_iterations=pops,
        activations=activations,
        improvements=improvements,
        wall_time_ns=wall,
    )
    return SsspResult(dist, parent, neg_cycle, stats, cycle_witness=witness)


def spfa_fifo(g: Graph, source: int) -> SsspResult:
    """Queue-based label correcting with plain FIFO order."""
    return _spfa(g, source, slf=False, mode="spfa-fifo")


def spfa_slf(g: Graph, source: int) -> SsspResult:
    """SPFA with the smallest-label-first deque heuristic."""
    return _spfa(g, source, slf=True, mode="spfa-slf")


def dijkstra_oracle(g: Graph, source: int) -> SsspResult:
    """Lazy-deletion Dijkstra.  Only valid on non-negative weights; used as
    an independent oracle there."""
    check_source(g, source)
    for w in g.weights:
        if w < 0:
            raise NegativeWeightPresent(f"negative weight {w}")
    n = g.n
    offsets, targets, weights = g.offsets, g.targets, g.weights
    dist = [INF] * n
    parent: list = [None] * n
    activations = [0] * n
    improvements = [0] * n
    dist[source] = 0.0
    heap = [(0.0, source)]
    activations[source] = 1
    inspections = 0
    pushes = 1
    pops = 0
    stale = 0
    t0 = time.perf_counter_ns()
    while heap:
        du, u = heapq.heappop(heap)
        if du != dist[u]:
            stale += 1
            continue
        pops += 1
        for e in range(offsets[u], offsets[u + 1]):
            inspections += 1
            cand = du + weights[e]
            v = targets[e]
            if cand < dist[v]:
                dist[v] = cand
                parent[v] = u
                improvements[v] += 1
                activations[v] += 1
                pushes += 1
                heapq.heappush(heap, (cand, v))
    wall = time.perf_counter_ns() - t0
    stats = RunStats(
        mode="dijkstra",
        edge_inspections=inspections,
        successful_relaxations=sum(improvements),
        queue_pushes=pushes,
        stale_pops=stale,
        outer_iterations=pops,
        activations=activations,
        improvements=improvements,
        wall_time_ns=wall,
    )
    return SsspResult(dist, parent, False, stats)
