"""Exception types shared across the package."""


class DomainError(ValueError):
    """A parameter lies outside the admissible range (degenerate modulus, bad order, ...)."""


class PoleError(ZeroDivisionError):
    """Evaluation requested at or too close to a pole of the underlying function."""


class ThetaOverflowError(OverflowError):
    """Theta-series argument outside the band where double precision can hold the result."""


class DegenerateFrameError(ValueError):
    """Frame construction impossible (zero-length edge or antiparallel tangents)."""


class ValidationError(ValueError):
    """A constructed object violates its structural invariants.

    Carries a ``report`` dict mapping invariant names to the measured residual.
    """

    def __init__(self, message: str, report: dict | None = None):
        super().__init__(message)
        self.report = report or {}
