"""Exception types raised at the public boundary of :mod:`sep3q`."""


class Sep3qError(ValueError):
    """Base class for every error raised by this package."""


class ZeroVector(Sep3qError):
    pass


class NotNormalized(Sep3qError):
    pass


class NotHermitian(Sep3qError):
    pass


class TraceNotOne(Sep3qError):
    pass


class NotPositive(Sep3qError):
    def __init__(self, message, eigenvalue=None):
        super().__init__(message)
        self.eigenvalue = eigenvalue


class NonFinite(Sep3qError):
    pass


class ShapeError(Sep3qError):
    pass


class ConvergenceFailure(Sep3qError, ArithmeticError):
    pass


class WrongRank(Sep3qError):
    pass


class InvalidParams(Sep3qError):
    pass


class ParseError(Sep3qError):
    pass


class UnknownState(Sep3qError):
    pass
