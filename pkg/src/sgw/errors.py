"""Exception hierarchy shared across the package."""


class SgwError(Exception):
    """Base class for all library errors."""


class LoopEdgeError(SgwError):
    pass


class DuplicateEdgeError(SgwError):
    pass


class VertexOutOfRangeError(SgwError):
    pass


class BadSignError(SgwError):
    pass


class NotAWalkError(SgwError):
    pass


class DifferentUnderlyingGraphError(SgwError):
    pass


class NotACycleError(SgwError):
    pass


class DisconnectedError(SgwError):
    pass


class NoEdgesError(SgwError):
    pass


class EmptyListError(SgwError):
    pass


class IndexOutOfRangeError(SgwError):
    pass


class OrderTooLargeError(SgwError):
    pass


class TooLargeError(SgwError):
    pass


class BadParameterError(SgwError):
    pass


class NotAGridError(SgwError):
    pass


class TooManyRowsError(SgwError):
    pass


class GuardExceededError(SgwError):
    pass


class InternalInvariantViolation(SgwError):
    pass


class BoundExceededError(SgwError):
    """Raised when a chromatic-number search hits its upper cap.

    Carries the best-known interval: ``lo`` is a proved lower bound,
    ``hi`` is ``None`` when no upper bound is known.
    """

    def __init__(self, lo, hi=None):
        super().__init__(f"chromatic number in [{lo}, {hi if hi is not None else '?'}]")
        self.lo = lo
        self.hi = hi


class ParseError(SgwError):
    """Malformed graph file."""
