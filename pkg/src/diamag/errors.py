"""Exception hierarchy for the diamag package.

Every error raised by the public API derives from DiamagError so callers can
catch one base type. Validation-style failures double as ValueError and
numerical failures as RuntimeError to stay friendly to generic handling.
"""

from __future__ import annotations


class DiamagError(Exception):
    """Base class for all diamag errors."""


class ValidationError(DiamagError, ValueError):
    """An input field is missing, non-finite, or out of its allowed range.

    The message names the offending field.
    """


class PoleError(DiamagError, ValueError):
    """A requested evaluation puts an integrand pole on the contour.

    Raised for sigma = +-1 in the branch logarithm and for collisionless
    (y = 0) points whose poles fall inside the integration interval.
    """


class DomainError(DiamagError, ValueError):
    """An operation was called outside the parameter domain it serves."""


class ConvergenceError(DiamagError, RuntimeError):
    """Adaptive quadrature failed to reach the requested tolerance.

    Carries the best available estimate and its error bound so callers can
    decide whether the partial result is still useful.
    """

    def __init__(self, message: str, value: complex, err: float, subdivisions: int):
        super().__init__(message)
        self.value = value
        self.err = err
        self.subdivisions = subdivisions


class ExtrapolationError(DiamagError, RuntimeError):
    """Richardson extrapolation saw non-monotone convergence across widths."""


class ConfigError(DiamagError, ValueError):
    """A configuration file line is malformed or names an unknown key."""
