"""Seeded construction of the four benchmark graph families plus the
edge-increment perturbation.

Families
--------
``sparse-random``
    Exactly ``m`` edges with uniformly random endpoints and uniform
    non-negative weights.  Reachability from vertex 0 is left to chance.

``neg-dense``
    Mixed-sign weights that provably contain no negative cycle: every
    vertex gets a hidden potential ``p(v)`` and each edge ``(u, v)`` is
    weighted ``w0 + p(u) - p(v)`` with ``w0 > 0``, so any cycle's weight
    telescopes to the sum of its ``w0`` terms.  All ``w0`` come from one
    narrow uniform band, so relative to the potentials the graph behaves
    like a near-uniform positive-weight graph; ``neg_fraction`` is hit by
    orienting a computed share of edges down-potential (never negative) or
    up-potential (negative whenever the potential gap exceeds ``w0``).
    ``weight_hi`` sets the overall scale; ``weight_lo`` matters only for
    ``neg_fraction = 0``, which degenerates to plain uniform weights.  The
    potentials ride along on the returned graph so later edge increments
    can reuse the same scheme.

``windmill``
    The classic windmill: ``blades`` bidirected complete graphs on
    ``blade_size`` vertices sharing a single hub, uniform positive
    weights.  ``n = blades * (blade_size - 1) + 1``.

``slf-killer``
    Adversarial input for the smallest-label-first deque heuristic.  A
    low-weight trunk chain keeps tiny labels at the deque front, which
    parks a sequence of improver vertices behind a high-degree amplifier
    vertex in worst-label-first order.  Each improver then lowers the
    amplifier's label just enough that it jumps the queue and re-relaxes
    its whole out-neighbourhood, giving Theta(n^2) inspections for
    SPFA-SLF, while a global-minimum priority order pops the best improver
    first and settles the amplifier once.

All randomness comes from ``random.Random`` (Mersenne Twister) seeded with
the 64-bit spec seed; identical parameters give byte-identical graphs.
Weights are rounded to 6 decimal digits to keep path sums well
conditioned.
"""

import math
import random
from dataclasses import dataclass

from .errors import PotentialUnavailable, SpecInvalid
from .graph import EdgeListDoc, Graph, from_edge_list

_FAMILIES = ("sparse-random", "neg-dense", "windmill", "slf-killer")

# smallest base offset for potential-shifted weights: large against float
# rounding error so no cycle can telescope to a (spuriously) negative sum
_W0_FLOOR = 5e-4


def _r6(x: float) -> float:
    return round(x, 6)


@dataclass
class GenSpec:
    family: str
    n: int = 0
    m: int = 0
    weight_lo: float = 0.0
    weight_hi: float = 10.0
    neg_fraction: float = 0.0
    seed: int = 0

    def validate(self) -> None:
        if self.family not in _FAMILIES:
            raise SpecInvalid(f"unknown family {self.family!r}")
        if self.n < 1:
            raise SpecInvalid("n must be >= 1")
        if self.m < 0:
            raise SpecInvalid("m must be >= 0")
        if self.weight_lo > self.weight_hi:
            raise SpecInvalid("weight_lo must be <= weight_hi")
        if not 0.0 <= self.neg_fraction <= 1.0:
            raise SpecInvalid("neg_fraction must be in [0, 1]")


def gen_sparse_random(spec: GenSpec) -> Graph:
    spec.validate()
    if spec.family != "sparse-random":
        raise SpecInvalid(f"family {spec.family!r} is not sparse-random")
    if spec.weight_lo < 0:
        raise SpecInvalid("sparse-random weights must be non-negative")
    rng = random.Random(spec.seed)
    n, lo, hi = spec.n, spec.weight_lo, spec.weight_hi
    edges = []
    for _ in range(spec.m):
        u = rng.randrange(n)
        v = rng.randrange(n)
        edges.append((u, v, _r6(rng.uniform(lo, hi))))
    return from_edge_list(EdgeListDoc(n, edges))


def gen_neg_dense(spec: GenSpec) -> Graph:
    spec.validate()
    if spec.family != "neg-dense":
        raise SpecInvalid(f"family {spec.family!r} is not neg-dense")
    if spec.weight_lo < 0:
        raise SpecInvalid("neg-dense base weights must be non-negative; "
                          "negativity is steered by neg_fraction")
    rng = random.Random(spec.seed)
    n, m, f = spec.n, spec.m, spec.neg_fraction
    lo, hi = spec.weight_lo, spec.weight_hi
    if f == 0.0:
        potentials = [0.0] * n
        edges = []
        for _ in range(m):
            u = rng.randrange(n)
            v = rng.randrange(n)
            w0 = rng.uniform(max(lo, _W0_FLOOR), max(hi, 1.0))
            edges.append((u, v, _r6(w0)))
        g = from_edge_list(EdgeListDoc(n, edges))
        g.potentials = potentials
        return g
    spread = max(1.0, hi)
    potentials = [_r6(rng.uniform(0.0, spread)) for _ in range(n)]
    # Base weights live in one narrow band.  High fractions need the band
    # pushed toward zero (an up-potential edge goes negative only when the
    # potential gap exceeds w0), so it shrinks once f passes one half, but
    # never below a floor that keeps every telescoped cycle sum safely
    # positive against the 6-digit weight rounding.
    scale = max(0.08, min(1.0, 2.0 * (1.0 - f)))
    w0_hi = 0.10 * spread * scale
    w0_lo = 0.8 * w0_hi
    # For potentials uniform on [0, spread], an up-potential edge is
    # negative with probability q = E[(1 - w0/spread)^2].  Forcing shares
    # of edges to point down-potential (always positive) or up-potential
    # lands the expected negative fraction exactly on f (capped at q).
    a, b = w0_lo / spread, w0_hi / spread
    q = ((1.0 - a) ** 3 - (1.0 - b) ** 3) / (3.0 * (b - a))
    if f <= q / 2.0:
        force_pos, force_neg = 1.0 - 2.0 * f / q, 0.0
    else:
        force_pos, force_neg = 0.0, min(1.0, 2.0 * f / q - 1.0)
    edges = []
    for _ in range(m):
        u = rng.randrange(n)
        v = rng.randrange(n)
        w0 = rng.uniform(w0_lo, w0_hi)
        r = rng.random()
        if r < force_pos:
            if potentials[u] < potentials[v]:
                u, v = v, u
        elif r < force_pos + force_neg:
            if potentials[u] > potentials[v]:
                u, v = v, u
        edges.append((u, v, _r6(w0 + potentials[u] - potentials[v])))
    g = from_edge_list(EdgeListDoc(n, edges))
    g.potentials = potentials
    return g


def gen_windmill(blades: int, blade_size: int, seed: int,
                 weight_lo: float = 1.0, weight_hi: float = 10.0) -> Graph:
    if blades < 1:
        raise SpecInvalid("blades must be >= 1")
    if blade_size < 2:
        raise SpecInvalid("blade_size must be >= 2")
    if weight_lo <= 0 or weight_lo > weight_hi:
        raise SpecInvalid("windmill weights must be positive")
    rng = random.Random(seed)
    n = blades * (blade_size - 1) + 1
    edges = []
    for b in range(blades):
        start = 1 + b * (blade_size - 1)
        members = [0] + list(range(start, start + blade_size - 1))
        for x in members:
            for y in members:
                if x != y:
                    edges.append((x, y, _r6(rng.uniform(weight_lo, weight_hi))))
    return from_edge_list(EdgeListDoc(n, edges))


def gen_slf_killer(n: int, seed: int) -> Graph:
    """Build the adversarial instance described in the module docstring.

    Layout (source 0): trunk vertices 1..t, improvers t+1..2t, the
    amplifier at 2t+1, and its out-neighbourhood filling the rest.  Vertex
    numbering ascends along the trunk so Bellman-Ford settles the graph in
    two passes while SPFA-SLF grinds through t re-relaxations of the
    amplifier's out-edges.
    """
    if n < 8:
        raise SpecInvalid("slf-killer needs n >= 8")
    rng = random.Random(seed)
    t = (n - 3) // 3
    fan = n - 3 - 2 * t  # amplifier out-degree
    # trunk has one zero-out-degree sentinel at the end so that every
    # improver is enqueued while the deque front still holds a tiny trunk
    # label (otherwise the front-insert rule would let the best improver
    # jump the queue and the cascade would never fire)
    trunk = list(range(1, t + 2))
    improvers = list(range(t + 2, 2 * t + 2))
    amp = 2 * t + 2
    fan_out = list(range(2 * t + 3, 2 * t + 3 + fan))
    gap = _r6(8.0 * (1.0 + 0.25 * rng.random()))
    step = _r6(1e-4 * (1.0 + 0.5 * rng.random()))
    big = _r6((t + 2) * gap)

    def improver_label(i):  # label of the i-th improver, decreasing in i
        return (t - i + 1) * gap

    edges = [(0, trunk[0], step), (0, amp, big)]
    for i in range(1, t + 1):
        z = trunk[i - 1]
        edges.append((z, trunk[i], step))
        edges.append((z, improvers[i - 1], _r6(improver_label(i) - i * step)))
    for i in range(1, t + 1):
        # arrival at the amplifier undercuts the next improver's label
        edges.append((improvers[i - 1], amp, _r6(-1.5 * gap)))
    for j, psi in enumerate(fan_out, start=1):
        edges.append((amp, psi, _r6(j * 1e-6)))
    return from_edge_list(EdgeListDoc(n, edges))


def add_edges(g: Graph, fraction: float, weight_lo: float, weight_hi: float,
              seed: int) -> Graph:
    """New graph with ``ceil(fraction * m)`` extra random edges appended;
    the original edges are preserved verbatim.

    Graphs carrying potentials get potential-shifted additions (mixed-sign
    but still negative-cycle-free); plain non-negative graphs get plain
    non-negative additions.  A plain graph that already has negative edges
    cannot be extended safely and raises PotentialUnavailable.
    """
    if not 0.0 < fraction <= 1.0:
        raise SpecInvalid("fraction must be in (0, 1]")
    if fraction * g.m < 1.0:
        raise SpecInvalid("fraction * m must be >= 1")
    if weight_lo > weight_hi:
        raise SpecInvalid("weight_lo must be <= weight_hi")
    extra = math.ceil(fraction * g.m)
    rng = random.Random(seed)
    n = g.n
    edges = list(g.edges())
    if g.potentials is not None:
        p = g.potentials
        lo = max(weight_lo, _W0_FLOOR)
        hi = max(weight_hi, lo)
        for _ in range(extra):
            u = rng.randrange(n)
            v = rng.randrange(n)
            edges.append((u, v, _r6(rng.uniform(lo, hi) + p[u] - p[v])))
    else:
        if any(w < 0 for w in g.weights):
            raise PotentialUnavailable(
                "graph has negative edges but no potentials; cannot add "
                "edges without risking a negative cycle")
        if weight_lo < 0:
            raise SpecInvalid("additions to a plain graph must be non-negative")
        for _ in range(extra):
            u = rng.randrange(n)
            v = rng.randrange(n)
            edges.append((u, v, _r6(rng.uniform(weight_lo, weight_hi))))
    out = from_edge_list(EdgeListDoc(n, edges))
    out.potentials = g.potentials
    return out


def plant_negative_cycle(g: Graph, cycle_len: int, seed: int,
                         total_weight: float = -0.5,
                         source: int = 0) -> Graph:
    """Fault injection for detection tests: append a cycle of
    ``cycle_len`` fresh edges whose weights sum to ``total_weight`` (< 0),
    plus an edge making it reachable from ``source``.

    The potentials, if any, are dropped — the guarantee they encode no
    longer holds.
    """
    if cycle_len < 2 or cycle_len > g.n:
        raise SpecInvalid("cycle_len must be in [2, n]")
    if total_weight >= 0:
        raise SpecInvalid("total_weight must be negative")
    rng = random.Random(seed)
    members = rng.sample(range(g.n), cycle_len)
    edges = list(g.edges())
    if source not in members:
        edges.append((source, members[0], _r6(rng.uniform(0.1, 1.0))))
    partial = 0.0
    for i in range(cycle_len - 1):
        w = _r6(rng.uniform(0.1, 1.0))
        partial += w
        edges.append((members[i], members[i + 1], w))
    edges.append((members[-1], members[0], _r6(total_weight - partial)))
    return from_edge_list(EdgeListDoc(g.n, edges))


def generate(family: str, seed: int, n: "int | None" = None,
             m: "int | None" = None, weight_lo: "float | None" = None,
             weight_hi: "float | None" = None, neg_fraction: float = 0.3,
             blades: "int | None" = None,
             blade_size: "int | None" = None) -> Graph:
    """Single entry point used by the CLI and the suite runner."""
    if family == "sparse-random":
        if n is None or m is None:
            raise SpecInvalid("sparse-random needs n and m")
        return gen_sparse_random(GenSpec(
            family=family, n=n, m=m,
            weight_lo=0.0 if weight_lo is None else weight_lo,
            weight_hi=10.0 if weight_hi is None else weight_hi,
            seed=seed))
    if family == "neg-dense":
        if n is None or m is None:
            raise SpecInvalid("neg-dense needs n and m")
        return gen_neg_dense(GenSpec(
            family=family, n=n, m=m,
            weight_lo=0.0 if weight_lo is None else weight_lo,
            weight_hi=10.0 if weight_hi is None else weight_hi,
            neg_fraction=neg_fraction, seed=seed))
    if family == "windmill":
        if blades is None or blade_size is None:
            raise SpecInvalid("windmill needs blades and blade_size")
        return gen_windmill(
            blades, blade_size, seed,
            weight_lo=1.0 if weight_lo is None else weight_lo,
            weight_hi=10.0 if weight_hi is None else weight_hi)
    if family == "slf-killer":
        if n is None:
            raise SpecInvalid("slf-killer needs n")
        return gen_slf_killer(n, seed)
    raise SpecInvalid(f"unknown family {family!r}")
