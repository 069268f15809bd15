class SectionsError(Exception):
    """Base class for every error raised by the sections app."""


class DomainError(SectionsError, ValueError):
    """A parameter or precondition is outside the admissible range."""

    def __init__(self, message, field=None):
        super().__init__(message)
        self.field = field


class HypothesisError(DomainError):
    """A check was asked for parameters its statement does not cover."""


class DegenerateError(DomainError):
    """The requested object collapses (e.g. an empty remainder)."""


class ConvergenceError(SectionsError):
    """Iteration cap reached; keeps the best iterate for a retry."""

    def __init__(self, message, best_iterate=(), residuals=()):
        super().__init__(message)
        self.best_iterate = tuple(best_iterate)
        self.residuals = tuple(residuals)


class InsufficientDensityError(SectionsError):
    """A curve sample is too coarse for the requested resolution."""

    def __init__(self, message, required_points):
        super().__init__(message)
        self.required_points = required_points
