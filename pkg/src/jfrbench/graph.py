"""Immutable directed graphs in compressed sparse row form, plus the
plain-text edge-list format.

A graph is built once from an edge list and never mutated afterwards.  The
CSR arrays are ordinary Python lists: ``offsets`` has ``n + 1`` entries,
``targets`` and ``weights`` have ``m`` entries each, and the out-edges of
``u`` occupy the slice ``offsets[u]:offsets[u + 1]`` in the order the edges
were supplied.  Parallel edges and non-negative self-loops are allowed.

The text format is line-oriented ASCII: a header ``n m``, then one ``tail
head weight`` line per edge (0-based endpoints, LF line endings).  Lines
starting with ``#`` are comments and do not count toward ``m``.
"""

import math
from dataclasses import dataclass, field

from .errors import (
    HeaderMismatch,
    IndexOutOfRange,
    NegativeSelfLoop,
    NonFiniteWeight,
    ParseError,
)


@dataclass
class EdgeListDoc:
    """A parsed edge list: vertex count plus ``(tail, head, weight)`` rows."""

    n: int
    edges: list[tuple[int, int, float]] = field(default_factory=list)

    @property
    def m(self) -> int:
        return len(self.edges)


class Graph:
    """Directed graph with float weights in CSR form.

    Attributes are set once at construction and treated as read-only.
    ``potentials`` is an optional per-vertex list carried by generators that
    build weights via a potential shift; it is what makes later negative-safe
    edge additions possible and is never serialized.
    """

    __slots__ = ("n", "m", "offsets", "targets", "weights", "potentials")

    def __init__(self, n, offsets, targets, weights, potentials=None):
        self.n = n
        self.m = len(targets)
        self.offsets = offsets
        self.targets = targets
        self.weights = weights
        self.potentials = potentials

    def out_degree(self, u: int) -> int:
        if not 0 <= u < self.n:
            raise IndexOutOfRange(f"vertex {u} not in [0, {self.n})")
        return self.offsets[u + 1] - self.offsets[u]

    def out_edges(self, u: int) -> list[tuple[int, float]]:
        """``(head, weight)`` pairs for ``u`` in insertion order."""
        if not 0 <= u < self.n:
            raise IndexOutOfRange(f"vertex {u} not in [0, {self.n})")
        lo, hi = self.offsets[u], self.offsets[u + 1]
        return list(zip(self.targets[lo:hi], self.weights[lo:hi]))

    def edges(self):
        """Iterate all edges as ``(tail, head, weight)`` in CSR order."""
        offsets, targets, weights = self.offsets, self.targets, self.weights
        for u in range(self.n):
            for e in range(offsets[u], offsets[u + 1]):
                yield u, targets[e], weights[e]

    def to_edge_list(self) -> EdgeListDoc:
        return EdgeListDoc(self.n, list(self.edges()))

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n and self.offsets == other.offsets
                and self.targets == other.targets
                and self.weights == other.weights)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(doc: EdgeListDoc) -> Graph:
    """Build a CSR graph, validating endpoints and weights.

    Preserves the relative order of each vertex's out-edges.  Rejects
    endpoints outside ``[0, n)``, non-finite weights, and negative
    self-loops (a one-edge negative cycle).
    """
    n = doc.n
    counts = [0] * (n + 1)
    for tail, head, weight in doc.edges:
        if not (0 <= tail < n and 0 <= head < n):
            raise IndexOutOfRange(f"edge ({tail}, {head}) outside [0, {n})")
        if not math.isfinite(weight):
            raise NonFiniteWeight(f"edge ({tail}, {head}) weight {weight!r}")
        if tail == head and weight < 0:
            raise NegativeSelfLoop(f"vertex {tail} loop weight {weight}")
        counts[tail + 1] += 1
    offsets = [0] * (n + 1)
    for i in range(n):
        offsets[i + 1] = offsets[i] + counts[i + 1]
    m = len(doc.edges)
    targets = [0] * m
    weights = [0.0] * m
    cursor = offsets[:]
    for tail, head, weight in doc.edges:
        slot = cursor[tail]
        targets[slot] = head
        weights[slot] = float(weight)
        cursor[tail] = slot + 1
    return Graph(n, offsets, targets, weights)


def _format_weight(w: float) -> str:
    # repr() gives the shortest string that round-trips through float().
    return repr(float(w))


def write_text(doc: EdgeListDoc) -> bytes:
    """Serialize a document in canonical form (no comments, LF endings)."""
    lines = [f"{doc.n} {doc.m}"]
    for tail, head, weight in doc.edges:
        lines.append(f"{tail} {head} {_format_weight(weight)}")
    return ("\n".join(lines) + "\n").encode("ascii")


def read_text(data: "bytes | str") -> EdgeListDoc:
    """Parse edge-list text.  Raises ParseError with the offending line
    number, or HeaderMismatch when the declared edge count is wrong."""
    if isinstance(data, bytes):
        try:
            text = data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError("non-ASCII input", 1) from exc
    else:
        text = data
    header = None
    edges = []
    for line_no, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line and line_no > 1:
            # tolerate the trailing newline / blank tail only
            continue
        if line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise ParseError(f"expected header 'n m', got {raw!r}", line_no)
            try:
                header = (int(fields[0]), int(fields[1]))
            except ValueError:
                raise ParseError(f"bad header {raw!r}", line_no) from None
            if header[0] < 0 or header[1] < 0:
                raise ParseError("negative header field", line_no)
            continue
        if len(fields) != 3:
            raise ParseError(f"expected 'tail head weight', got {raw!r}", line_no)
        try:
            tail, head = int(fields[0]), int(fields[1])
            weight = float(fields[2])
        except ValueError:
            raise ParseError(f"bad edge line {raw!r}", line_no) from None
        edges.append((tail, head, weight))
    if header is None:
        raise ParseError("empty input", 1)
    n, m = header
    if m != len(edges):
        raise HeaderMismatch(f"header declares m={m}, found {len(edges)} edge lines")
    return EdgeListDoc(n, edges)


def read_file(path) -> Graph:
    with open(path, "rb") as fh:
        return from_edge_list(read_text(fh.read()))


def write_file(path, g: Graph) -> None:
    with open(path, "wb") as fh:
        fh.write(write_text(g.to_edge_list()))
