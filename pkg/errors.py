"""
Exceptions raised by the toolkit.

Every precondition failure is a ParcaveError, so callers (and the CLI) can
catch one type and still tell the cases apart by class.
"""


class ParcaveError(ValueError):
    """Base class for all toolkit errors."""


class EmptySetError(ParcaveError):
    def __init__(self, message: str = "empty set"):
        super().__init__(message)


class NegativeRadiusError(ParcaveError):
    def __init__(self, message: str = "negative radius"):
        super().__init__(message)


class GammaInfiniteError(ParcaveError):
    def __init__(self, message: str = "γ infinite"):
        super().__init__(message)


class HypothesisViolatedError(ParcaveError):
    def __init__(self, message: str = "hypothesis violated"):
        super().__init__(message)


class OneSidedOnlyError(ParcaveError):
    def __init__(self, message: str = "one-sided only"):
        super().__init__(message)


class CurveVanishesError(ParcaveError):
    def __init__(self, message: str = "curve vanishes"):
        super().__init__(message)


class InsufficientDataError(ParcaveError):
    def __init__(self, message: str = "insufficient data"):
        super().__init__(message)


class EmptyDomainError(ParcaveError):
    def __init__(self, message: str = "empty domain"):
        super().__init__(message)


class OutOfTheoremRangeError(ParcaveError):
    def __init__(self, message: str = "out of theorem range"):
        super().__init__(message)


class GridTooNarrowError(ParcaveError):
    def __init__(self, message: str = "grid too narrow"):
        super().__init__(message)


class GridTooCoarseError(ParcaveError):
    def __init__(self, message: str = "grid too coarse"):
        super().__init__(message)


class NotConvexError(ParcaveError):
    def __init__(self, message: str = "input is not convex"):
        super().__init__(message)


class SuperlinearityError(ParcaveError):
    def __init__(self, message: str = "superlinearity required"):
        super().__init__(message)


class ParameterRangeError(ParcaveError):
    """A numeric parameter is outside the operation's documented range."""


class LiteralParseError(ParcaveError):
    """A CLI set/density/function literal could not be parsed."""
