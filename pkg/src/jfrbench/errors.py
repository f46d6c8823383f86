"""Exception types shared across the toolkit."""


class JfrError(Exception):
    """Base class for all toolkit errors."""


# --- graph construction / validation ---

class IndexOutOfRange(JfrError):
    """An edge endpoint is outside [0, n)."""


class NonFiniteWeight(JfrError):
    """An edge weight is NaN or infinite."""


class NegativeSelfLoop(JfrError):
    """A self-loop with negative weight (a trivial negative cycle)."""


# --- edge-list text format ---

class ParseError(JfrError):
    """Malformed edge-list text.  Carries the 1-based line number."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class HeaderMismatch(JfrError):
    """Declared edge count in the header does not match the edge lines."""


# --- generators ---

class SpecInvalid(JfrError):
    """A generator parameter is out of its valid range."""


class PotentialUnavailable(JfrError):
    """Negative-safe edge increments need the hidden potentials, which this
    graph does not carry."""


# --- algorithms ---

class NegativeWeightPresent(JfrError):
    """The Dijkstra oracle was handed a graph with a negative edge."""


class Unreachable(JfrError):
    """Path reconstruction requested for a vertex with infinite distance."""


class NoCycleRecorded(JfrError):
    """Cycle extraction requested on a result that did not flag a negative
    cycle."""


# --- metrics ---

class ZeroOps(JfrError):
    """A comparison was requested against a run with zero operations."""


class ModeMismatch(JfrError):
    """The bound check applies only to strict-mode runs with a matching k."""


class NegCycleResult(JfrError):
    """Optimality conditions are undefined for a negative-cycle result."""


# --- CLI ---

class UnknownAlgorithm(JfrError):
    """Algorithm name not recognised by the CLI."""
