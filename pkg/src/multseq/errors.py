"""Exception hierarchy shared by every module of the package."""


class MultSeqError(Exception):
    """Base class for all errors raised by multseq."""


class DimensionMismatchError(MultSeqError, ValueError):
    pass


class RingMismatchError(MultSeqError, ValueError):
    pass


class ExponentOverflowError(MultSeqError, OverflowError):
    pass


class ImproperIdealError(MultSeqError, ValueError):
    """Raised when a zero or unit ideal reaches an operation that needs a proper nonzero ideal."""


class NotMPrimaryError(MultSeqError, ValueError):
    pass


class ResourceCapError(MultSeqError):
    """An intermediate object grew beyond a configured cap."""


class GridCapExceededError(ResourceCapError):
    """The adaptive Hilbert-polynomial driver ran out of grid budget.

    ``last_grid`` is the last grid size tried and ``failing_points`` lists
    (m, n, h(m, n), P(m, n)) tuples where the fitted polynomial disagreed,
    or is empty when the fit failed for another reason (see ``reason``).
    """

    def __init__(self, message, last_grid, failing_points=(), reason=""):
        super().__init__(message)
        self.last_grid = last_grid
        self.failing_points = tuple(failing_points)
        self.reason = reason


class SingularSystemError(MultSeqError, ArithmeticError):
    pass


class InvalidFitError(MultSeqError, ValueError):
    """Extracted coefficients are not nonnegative integers."""


class DegenerateSimplexError(MultSeqError, ArithmeticError):
    pass


class InconclusiveError(MultSeqError):
    pass


class ParseError(MultSeqError, ValueError):
    pass
