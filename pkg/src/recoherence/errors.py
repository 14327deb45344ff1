"""Exception types shared across the package."""

from __future__ import annotations


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation
    (negative squeeze magnitude, non-finite input, time outside the flight
    interval, non-positive frequency, ...)."""


class RangeError(ValueError):
    """A result or intermediate would overflow the representable range
    (squeeze magnitude beyond the e^{2r} cap, contrast factors beyond
    double precision, ...)."""


class ConvergenceError(RuntimeError):
    """A quadrature did not stabilise under refinement: two successive
    resolutions disagree by more than the configured tolerance."""


__all__ = ["DomainError", "RangeError", "ConvergenceError"]
