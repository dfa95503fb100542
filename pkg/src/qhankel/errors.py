"""Exception hierarchy shared across the package."""


class QHankelError(Exception):
    """Base class for all package-specific errors."""


class DomainError(QHankelError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class DivergentSeriesError(QHankelError):
    """The requested series has no region of convergence at these parameters."""


class LowerParamPoleError(QHankelError):
    """A lower series parameter sits on (or too close to) a pole q**-l."""


class NoConvergenceError(QHankelError):
    """The term budget was exhausted before the stopping tolerance was met."""


class PoleError(QHankelError, ValueError):
    """Evaluation requested at a pole of the function."""


class WindowTooSmallError(QHankelError):
    """A bilateral sum could not reach its tail tolerance within the window cap."""

    def __init__(self, message, tail_bound=None, window=None):
        super().__init__(message)
        self.tail_bound = tail_bound
        self.window = window


class InadmissibleBranchError(QHankelError):
    """The requested closed-form branch violates its exclusion conditions."""


class UnknownFunctionError(QHankelError, KeyError):
    """CLI evaluation of a function name that is not in the registry."""
