"""Exception hierarchy shared by every module of the package."""


class OrderError(ValueError):
    """Base class for all domain errors raised by compact_lines."""


class ForeignElement(OrderError):
    """An element was used with an order it does not inhabit."""


class PreconditionViolated(OrderError):
    pass


class NotADuplication(OrderError):
    pass


class NotFinite(OrderError):
    pass


class Exhausted(OrderError):
    pass


class EmptyOrder(OrderError):
    pass


class NotASubset(OrderError):
    pass


class GapObstruction(OrderError):
    """A fiber ``[lo, hi]`` of a dual map admits no side to pick.

    Raised when ``lo < hi``, ``lo`` is not isolated from the left and ``hi``
    is not isolated from the right.
    """

    def __init__(self, message, fiber=None):
        super().__init__(message)
        self.fiber = fiber


class NotRightInverse(OrderError):
    pass


class InfiniteTruncation(OrderError):
    """Restricting a gap filler to its own level leaves infinite support."""


class StabilizationViolation(OrderError):
    pass


class NotIncreasing(OrderError):
    pass


class InfiniteSupportSuspected(OrderError):
    pass


class BoundExceeded(OrderError):
    pass


class InvalidOrdinal(OrderError):
    pass


class ComparisonDiverged(OrderError):
    """Lexicographic scan hit its hard iteration cap without a verdict."""


class InvalidWitness(OrderError):
    """A presentation's witness function broke its own contract."""


class ParseError(OrderError):
    def __init__(self, message, line=1, column=1):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column
