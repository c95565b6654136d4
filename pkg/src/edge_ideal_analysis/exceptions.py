"""Exception types raised by the edge ideal analysis library.

Negative answers (a graph outside the class PC, a strong cover witness, a failing
Reisner link) are returned as values. The exceptions here signal invalid input or
a request that exceeds a configured bound.
"""

from typing import Dict, Optional


class EdgeIdealError(Exception):
    """Base class for all library errors."""


class BoundExceeded(EdgeIdealError):
    """An enumeration was asked to run above its configured bound.

    Attributes:
        what: Name of the bounded quantity (e.g. 'vertex_count').
        size: The requested size.
        bound: The configured limit.
    """

    def __init__(self, what: str, size: int, bound: int):
        self.what = what
        self.size = size
        self.bound = bound
        super().__init__(f"{what} {size} exceeds bound {bound}")


class NotACover(EdgeIdealError, ValueError):
    """The vertex set does not cover every edge."""


class MissingOrientation(EdgeIdealError, ValueError):
    """An underlying edge carries no orientation."""


class ZeroIdeal(EdgeIdealError, ValueError):
    """The operation needs a nonzero ideal."""


class UnitIdeal(EdgeIdealError, ValueError):
    """The operation needs a proper ideal."""


class AmbientMismatch(EdgeIdealError, ValueError):
    """Two ideals live in polynomial rings with different variable counts."""


class NotSquarefree(EdgeIdealError, ValueError):
    """A squarefree monomial ideal was required."""


class ExponentOverflow(EdgeIdealError, OverflowError):
    """An exponent left the signed 64-bit range."""


class NotAPath3(EdgeIdealError, ValueError):
    """The underlying graph is not a path on four vertices."""


class NotA5Cycle(EdgeIdealError, ValueError):
    """The underlying graph is not a 5-cycle."""


class NoPendantPerfectMatching(EdgeIdealError, ValueError):
    """The pendant edges do not form a perfect matching."""


class ParseError(EdgeIdealError, ValueError):
    """A graph document or ideal string could not be read.

    Attributes:
        line: 1-based line number, or 0 when the position is unknown.
        reason: Human readable description.
    """

    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


class ValidationError(EdgeIdealError, ValueError):
    """A structurally valid document violates a graph invariant.

    Attributes:
        invariant: Short name of the violated invariant.
        detail: Offending labels or values.
    """

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        self.detail = detail
        message = invariant if not detail else f"{invariant}: {detail}"
        super().__init__(message)


class RouteDisagreement(EdgeIdealError):
    """Two decision routes returned different verdicts for one instance."""

    def __init__(self, verdicts: Dict[str, Optional[bool]]):
        self.verdicts = dict(verdicts)
        super().__init__(f"routes disagree: {self.verdicts}")
