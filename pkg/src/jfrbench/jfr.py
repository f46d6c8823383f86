"""Jump-frontier relaxation in its two execution modes.

``jfr_strict`` is round-based: each outer iteration relaxes every frontier
vertex's out-edges (one hop), then lets the improvements ripple a further
``k - 1`` hops through bounded local multi-hop propagation, and finally
promotes everything strictly improved this iteration to the next frontier.
With ``k = 1`` it degenerates to frontier-restricted Bellman-Ford.

``jfr_pq`` is event-driven: a lazy-deletion priority queue keyed by
tentative distance selects the next active vertex; a vertex whose label
changed since its previous selection triggers a depth-``k`` local
propagation before its out-edges are relaxed; a density-triggered filter
prunes frontier marks that can no longer matter.

Both modes use strict ``<`` relaxation (first writer wins on ties) and the
shared instrumentation conventions of :mod:`jfrbench.results`.
"""

import heapq
import math
import time
from dataclasses import dataclass

from .baselines import check_source
from .graph import Graph
from .results import RunStats, SsspResult

INF = math.inf
_FILTER_CHECK_EVERY = 64


@dataclass
class JfrConfig:
    mode: str = "pq-dynamic"  # "strict-k" or "pq-dynamic"
    k: int = 2
    filter_alpha: float = 0.1
    stability_window: int = 64

    def validate(self) -> None:
        if self.mode not in ("strict-k", "pq-dynamic"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.k < 1:
            raise ValueError("k must be >= 1")
        if not 0.0 < self.filter_alpha <= 1.0:
            raise ValueError("filter_alpha must be in (0, 1]")
        if self.stability_window < 1:
            raise ValueError("stability_window must be >= 1")


class Frontier:
    """Active-vertex set: membership flags plus a count.

    The active list is derived on demand; insert/remove keep the
    one-entry-per-member invariant by construction.
    """

    __slots__ = ("membership", "size")

    def __init__(self, n: int):
        self.membership = [False] * n
        self.size = 0

    def insert(self, v: int) -> bool:
        """Mark ``v`` active; returns True when this is a fresh entry."""
        if self.membership[v]:
            return False
        self.membership[v] = True
        self.size += 1
        return True

    def remove(self, v: int) -> None:
        if self.membership[v]:
            self.membership[v] = False
            self.size -= 1

    def active_vertices(self) -> list:
        return [v for v, m in enumerate(self.membership) if m]


@dataclass
class FilterAux:
    """State the stability filter needs besides the frontier and queue."""

    dist: list
    last_relaxed: list  # label value at the vertex's last out-edge propagation
    last_improve_pop: list  # selection index of the vertex's last improvement
    pops: int
    stability_window: int


def lmh_propagate(g: Graph, seeds, k: int, dist, parent, stats: RunStats):
    """Bounded local propagation: at most ``k`` relaxation waves from
    ``seeds``, touching only vertices within ``k`` hops of them.

    On return no path of at most ``k`` edges out of a seed can still
    improve its endpoint (given the seed labels at call time).  Every
    evaluation is counted in both ``edge_inspections`` and
    ``lmh_inspections``; a ``(depth, inspections, window_degree_sum)``
    record is appended to ``stats.lmh_calls``.  Returns the strictly
    improved vertices in first-improvement order.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not seeds:
        raise ValueError("seeds must be nonempty")
    offsets, targets, weights = g.offsets, g.targets, g.weights
    if len(stats.improvements) != g.n:
        stats.improvements = [0] * g.n
    improvements = stats.improvements
    wave = [u for u in seeds if dist[u] != INF]
    window = set(wave)
    improved_all: list = []
    improved_seen = set()
    inspections = 0
    successes = 0
    for _round in range(k):
        if not wave:
            break
        next_wave: list = []
        next_seen = set()
        for u in wave:
            du = dist[u]
            for e in range(offsets[u], offsets[u + 1]):
                inspections += 1
                v = targets[e]
                window.add(v)
                cand = du + weights[e]
                if cand < dist[v]:
                    dist[v] = cand
                    parent[v] = u
                    improvements[v] += 1
                    successes += 1
                    if v not in improved_seen:
                        improved_seen.add(v)
                        improved_all.append(v)
                    if v not in next_seen:
                        next_seen.add(v)
                        next_wave.append(v)
        wave = next_wave
    window_degree_sum = sum(offsets[v + 1] - offsets[v] for v in window)
    stats.edge_inspections += inspections
    stats.lmh_inspections += inspections
    stats.successful_relaxations += successes
    stats.lmh_calls.append((k, inspections, window_degree_sum))
    return improved_all


def jfr_strict(g: Graph, source: int, k: int) -> SsspResult:
    """Round-based jump-frontier relaxation with depth parameter ``k``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    check_source(g, source)
    n = g.n
    offsets, targets, weights = g.offsets, g.targets, g.weights
    dist = [INF] * n
    parent: list = [None] * n
    activations = [0] * n
    improvements = [0] * n
    stats = RunStats(
        mode="jfr-strict",
        k=k,
        activations=activations,
        improvements=improvements,
    )
    dist[source] = 0.0
    frontier = [source]
    activations[source] = 1
    in_improved = [False] * n
    frontier_inspections = 0
    successes = 0
    outer = 0
    neg_cycle = False
    witness = None
    t0 = time.perf_counter_ns()
    while frontier:
        outer += 1
        improved: list = []
        # (a) one relaxation hop out of the frontier
        for u in frontier:
            du = dist[u]
            for e in range(offsets[u], offsets[u + 1]):
                frontier_inspections += 1
                cand = du + weights[e]
                v = targets[e]
                if cand < dist[v]:
                    dist[v] = cand
                    parent[v] = u
                    improvements[v] += 1
                    successes += 1
                    if not in_improved[v]:
                        in_improved[v] = True
                        improved.append(v)
        # (b) let the new labels ripple up to k-1 further hops
        if k > 1 and improved:
            for v in lmh_propagate(g, improved, k - 1, dist, parent, stats):
                if not in_improved[v]:
                    in_improved[v] = True
                    improved.append(v)
        # an improvement in iteration n or later is impossible without a
        # reachable negative cycle
        if improved and outer >= n:
            neg_cycle = True
            witness = improved[0]
            break
        # (c) promote this iteration's improved set to the next frontier
        for v in improved:
            in_improved[v] = False
            activations[v] += 1
        frontier = improved
    stats.wall_time_ns = time.perf_counter_ns() - t0
    stats.edge_inspections += frontier_inspections
    stats.successful_relaxations += successes
    stats.outer_iterations = outer
    return SsspResult(dist, parent, neg_cycle, stats, cycle_witness=witness)


def filter_stable_vertices(frontier: Frontier, queue, aux: FilterAux) -> None:
    """Drop frontier marks that can no longer matter.

    A vertex is removed when its label has already been propagated at its
    current value (so nothing pending can improve anything through it) and
    it has not improved within the last ``stability_window`` selections.
    Queue entries for removed vertices are left to drain as stale pops; any
    later strict improvement re-inserts the vertex, so distances are
    unaffected.
    """
    membership = frontier.membership
    dist = aux.dist
    last_relaxed = aux.last_relaxed
    last_improve_pop = aux.last_improve_pop
    cutoff = aux.pops - aux.stability_window
    for v, marked in enumerate(membership):
        if (marked and last_relaxed[v] == dist[v]
                and last_improve_pop[v] <= cutoff):
            frontier.remove(v)


def jfr_pq(g: Graph, source: int, cfg: "JfrConfig | None" = None) -> SsspResult:
    """Event-driven jump-frontier relaxation over a lazy priority queue."""
    if cfg is None:
        cfg = JfrConfig()
    cfg.validate()
    if cfg.mode != "pq-dynamic":
        raise ValueError("jfr_pq requires pq-dynamic mode")
    check_source(g, source)
    n = g.n
    offsets, targets, weights = g.offsets, g.targets, g.weights
    dist = [INF] * n
    parent: list = [None] * n
    activations = [0] * n
    improvements = [0] * n
    stats = RunStats(
        mode="jfr-pq",
        k=cfg.k,
        activations=activations,
        improvements=improvements,
    )
    nan = math.nan  # never equal to any label: "not yet propagated"
    last_relaxed = [nan] * n
    last_improve_pop = [0] * n
    last_pop_improvements = [-1] * n
    frontier = Frontier(n)
    dist[source] = 0.0
    frontier.insert(source)
    activations[source] = 1
    heap = [(0.0, source)]
    pushes = 1
    pops = 0
    stale = 0
    inspections = 0
    successes = 0
    neg_cycle = False
    witness = None
    heappush, heappop = heapq.heappush, heapq.heappop
    t0 = time.perf_counter_ns()
    while heap:
        key, u = heappop(heap)
        if key != dist[u] or not frontier.membership[u]:
            stale += 1
            continue
        frontier.remove(u)
        pops += 1
        # stability criterion: label changed since the previous selection
        if improvements[u] > last_pop_improvements[u]:
            for v in lmh_propagate(g, [u], cfg.k, dist, parent, stats):
                if improvements[v] >= n:
                    neg_cycle = True
                    witness = v
                    break
                last_improve_pop[v] = pops
                if frontier.insert(v):
                    activations[v] += 1
                heappush(heap, (dist[v], v))
                pushes += 1
            if neg_cycle:
                break
        last_pop_improvements[u] = improvements[u]
        # relax the selected vertex's out-edges
        du = dist[u]
        for e in range(offsets[u], offsets[u + 1]):
            inspections += 1
            cand = du + weights[e]
            v = targets[e]
            if cand < dist[v]:
                dist[v] = cand
                parent[v] = u
                improvements[v] += 1
                successes += 1
                if improvements[v] >= n:
                    neg_cycle = True
                    witness = v
                    break
                last_improve_pop[v] = pops
                if frontier.insert(v):
                    activations[v] += 1
                heappush(heap, (cand, v))
                pushes += 1
        last_relaxed[u] = du
        if neg_cycle:
            break
        if pops % _FILTER_CHECK_EVERY == 0 and frontier.size > cfg.filter_alpha * n:
            aux = FilterAux(dist, last_relaxed, last_improve_pop, pops,
                            cfg.stability_window)
            filter_stable_vertices(frontier, heap, aux)
    stats.wall_time_ns = time.perf_counter_ns() - t0
    stats.edge_inspections += inspections
    stats.successful_relaxations += successes
    stats.queue_pushes = pushes
    stats.stale_pops = stale
    stats.outer_iterations = pops
    return SsspResult(dist, parent, neg_cycle, stats, cycle_witness=witness)
