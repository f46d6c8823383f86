"""Path reconstruction and negative-cycle certificate extraction."""

import math

from .errors import NoCycleRecorded, Unreachable
from .graph import Graph
from .results import SsspResult


def reconstruct_path(result: SsspResult, v: int) -> list:
    """Vertex sequence from the source to ``v`` along parent pointers."""
    if result.neg_cycle:
        raise ValueError("paths are undefined on a negative-cycle result")
    if result.dist[v] == math.inf:
        raise Unreachable(f"vertex {v} has infinite distance")
    parent = result.parent
    seq = [v]
    cur = v
    while parent[cur] is not None:
        cur = parent[cur]
        seq.append(cur)
        if len(seq) > len(parent):
            raise RuntimeError("parent pointers form a cycle")
    seq.reverse()
    return seq


def _min_edge_weight(g: Graph, tail: int, head: int) -> float:
    """Cheapest weight among (possibly parallel) tail→head edges."""
    best = None
    for e in range(g.offsets[tail], g.offsets[tail + 1]):
        if g.targets[e] == head:
            w = g.weights[e]
            if best is None or w < best:
                best = w
    if best is None:
        raise RuntimeError(f"no edge {tail}->{head} in graph")
    return best


def cycle_weight(g: Graph, cycle: list) -> float:
    """Edge-weight sum around ``cycle`` (closing edge included), taking the
    cheapest edge wherever parallels exist."""
    total = 0.0
    for i, tail in enumerate(cycle):
        head = cycle[(i + 1) % len(cycle)]
        total += _min_edge_weight(g, tail, head)
    return total


def detect_negative_cycle(result: SsspResult, g: Graph) -> list:
    """Extract a strictly negative cycle from an over-improved run.

    Walks parent pointers ``n`` steps back from the vertex that tripped the
    negative-cycle guard; after ``n`` steps the walk must sit inside a
    cycle of the parent graph, which is then peeled off and returned in
    forward edge order.
    """
    if not result.neg_cycle:
        raise NoCycleRecorded("result does not flag a negative cycle")
    parent = result.parent
    witness = result.cycle_witness
    if witness is None:
        # fall back to the most-improved vertex
        imp = result.stats.improvements
        witness = max(range(len(imp)), key=imp.__getitem__)
    x = witness
    for _ in range(g.n):
        nxt = parent[x]
        if nxt is None:
            raise RuntimeError("parent walk left the improved region")
        x = nxt
    backward = [x]
    cur = parent[x]
    while cur != x:
        backward.append(cur)
        cur = parent[cur]
    backward.reverse()
    return backward
