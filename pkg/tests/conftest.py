import random

from jfrbench.graph import EdgeListDoc, from_edge_list


def potential_graph(n, m, seed, mixed=True):
    """Random test graph, free of negative cycles by construction.

    With ``mixed`` the weights are potential-shifted (w0 + p(u) - p(v),
    w0 > 0) so negative edges appear but every cycle telescopes to a
    positive sum; otherwise weights are plain non-negative.  Built here
    independently of the package generators so generator bugs cannot mask
    solver bugs.
    """
    rng = random.Random(seed)
    p = [rng.uniform(0.0, 10.0) for _ in range(n)]
    edges = []
    for _ in range(m):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if mixed:
            w = round(rng.uniform(0.001, 4.0) + p[u] - p[v], 6)
        else:
            w = round(rng.uniform(0.0, 4.0), 6)
        edges.append((u, v, w))
    return from_edge_list(EdgeListDoc(n, edges))


def triangle():
    return from_edge_list(EdgeListDoc(3, [(0, 1, 2.0), (1, 2, -1.0),
                                          (0, 2, 5.0)]))


def chain(length, weight=1.0):
    return from_edge_list(EdgeListDoc(length,
                                      [(i, i + 1, weight)
                                       for i in range(length - 1)]))
