"""Exception types raised across the package."""


class GraphError(ValueError):
    """Base class for malformed graph input or out-of-bounds queries."""


class OutOfRangeError(GraphError):
    pass


class SelfLoopError(GraphError):
    pass


class EmptyGraphError(GraphError):
    pass


class TooLargeError(GraphError):
    """The graph exceeds the order or size bound of an exhaustive routine."""


class NotAPermutationError(GraphError):
    pass


class NotAHoleError(GraphError):
    """The given vertex sequence is not an induced cycle of length >= 4."""


class InvalidWitnessError(GraphError):
    pass


class FormatError(GraphError):
    """Malformed graph6 or edge-list text.

    ``kind`` is one of ``BAD_CHAR``, ``TRUNCATED``, ``TRAILING_BITS_NONZERO``,
    ``COUNT_MISMATCH`` or ``SYNTAX``.
    """

    def __init__(self, kind, message):
        super().__init__(f"{kind}: {message}")
        self.kind = kind


class TheoremViolation(RuntimeError):
    """A constructive proof step failed on valid input.

    This should never be raised; if it is, the attached graph is a
    counterexample to one of the structural theorems the package relies on.
    """

    def __init__(self, message, graph=None, payload=None):
        super().__init__(message)
        self.graph = graph
        self.payload = payload or {}
