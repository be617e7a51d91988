"""Exception types shared across the library."""

from __future__ import annotations


class GwatraceError(Exception):
    """Base class for all library errors."""


class ValidationError(GwatraceError):
    """Invalid parameters, configuration, or input data."""


class GenericityViolation(ValidationError):
    """Parameter differences too close to the forbidden lattice."""


class ParityViolation(ValidationError):
    """q-deformation requires an even number of parameters."""


class SumNotInteger(ValidationError):
    """q-deformation requires the parameter sum to be an integer."""


class VariantMismatch(ValidationError):
    """Mixed filtered/q objects, or mismatched q values."""


class Unsupported(ValidationError):
    """Operation not defined for this variant."""


class NoPairing(ValidationError):
    """No involution pairs the parameters as c_i + conj(c'_j) = 1."""


class AmbiguousPairing(ValidationError):
    """Several candidate pairings collide within tolerance."""


class MembershipViolation(GwatraceError):
    """Element does not belong to the expected bimodule."""


class DegreeTooHigh(ValidationError):
    """Weight numerator degree exceeds n - 1."""


class ZeroConstraintViolated(ValidationError):
    """Untwisted weight (tau = 0) requires G(0) = 0."""


class QuasiPeriodMismatch(ValidationError):
    """Measured quasi-period factor of a q-weight disagrees with b/a."""


class QuadratureNotConverged(GwatraceError):
    """Adaptive quadrature hit its refinement cap before stabilizing."""


class DegenerateTrace(GwatraceError):
    """Trace form is rank deficient at some filtration level."""

    def __init__(self, level: int, message: str | None = None):
        self.level = level
        super().__init__(message or f"trace form degenerate at level {level}")


class TruncationOverflow(GwatraceError):
    """Product escapes the filtration truncation."""


class CompatibilityViolation(GwatraceError):
    """Block traces of a matrix context fail the compatibility identities."""


class ParseError(GwatraceError):
    """Polynomial expression rejected, with position and expectations."""

    def __init__(self, position: int, expected: str, found: str = ""):
        self.position = position
        self.expected = expected
        self.found = found
        what = f", found {found!r}" if found else ""
        super().__init__(f"parse error at position {position}: expected {expected}{what}")
