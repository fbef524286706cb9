"""
Custom exception hierarchy for the Koornwinder polynomial toolkit.
"""


class DimensionError(Exception):
    """Raised when operands disagree on variable count or matrix shape."""


class DomainError(Exception):
    """Raised when a point lies outside the domain of an evaluation."""


class SingularMatrixError(Exception):
    """Raised when an exact linear system has no unique solution."""


class PoleError(Exception):
    """Raised when a coefficient function is evaluated at one of its poles."""


class InterpolationError(Exception):
    """Raised when no nonsingular sample system is found within the retry cap."""


class InternalConsistencyError(Exception):
    """Raised when an interpolated result disagrees with direct evaluation."""


class InvarianceError(Exception):
    """Raised when a Laurent polynomial is not invariant under the Weyl group."""


class ParameterError(Exception):
    """Raised when a parameter set violates its validity conditions."""


class DegeneracyError(Exception):
    """Raised when two eigenvalues in a triangular solve coincide."""


class DegeneratePointError(Exception):
    """Raised when a truncated weight has a vanishing denominator."""


class InsufficientDataError(Exception):
    """Raised when a fit has no informative data points."""


class CacheError(Exception):
    """Raised when the polynomial cache cannot be read or written."""


class UsageError(Exception):
    """Raised for invalid command-line or job configuration input."""
