"""Exception types shared across the package.

Two broad groups matter for the CLI exit-code contract: ParameterError means
the caller asked for something malformed (exit 2), ComputationError means a
numerical procedure could not deliver a certified answer (exit 1).
"""

from __future__ import annotations


class ParameterError(ValueError):
    """Invalid construction parameter or unsupported request."""


class UnsupportedDomainError(ParameterError):
    """Target domain has no evaluable boundary map for this operation."""


class ComputationError(RuntimeError):
    """A numerical routine failed to produce a certified result."""


class ConvergenceError(ComputationError):
    """Series or iteration hit its cap before reaching tolerance."""


class BracketingError(ComputationError):
    """No sign change where theory guarantees one."""


class PoleProximityError(ComputationError):
    """Evaluation point too close to a kernel zero (functional pole)."""


class TableError(ComputationError):
    """Zero table cannot satisfy the request (too short, ceiling too low)."""


class KernelExhausted(Exception):
    """Internal: kernel backend ran off the end of the coefficient array.

    Carries the minimum array length to retry with; the series wrapper grows
    the cached coefficients and calls again.  Never escapes the package.
    """

    def __init__(self, needed: int):
        super().__init__(f"need at least {needed} coefficients")
        self.needed = needed
