"""Exception types shared across the package."""


class DgmflowError(Exception):
    """Base class for all package-specific errors."""


class InvalidInputError(DgmflowError, ValueError):
    """Malformed user input (non-finite coordinates, bad shapes, bad ids)."""


class UnsupportedDimensionError(DgmflowError, ValueError):
    """Requested simplex dimension outside the supported range."""


class StructuralError(DgmflowError, ValueError):
    """Complex violates a structural invariant (missing face, bad order)."""


class InvalidDegreeError(DgmflowError, ValueError):
    """Homology degree outside the supported range."""


class ShapeError(DgmflowError, ValueError):
    """Mismatched lengths or out-of-range indices between paired inputs."""


class ConvergenceError(DgmflowError, RuntimeError):
    """Iterative solver failed to reach its tolerance.

    Carries the final marginal violation in ``residual``.
    """

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class TooLargeError(DgmflowError, ValueError):
    """Problem size exceeds the guard for an exact solver."""


class DegeneratePlanError(DgmflowError, ValueError):
    """Transport plan has a zero row and cannot define barycenters."""


class ProvenanceError(DgmflowError, ValueError):
    """Diagram provenance refers to simplices not present in the complex."""


class DivergenceError(DgmflowError, RuntimeError):
    """Objective became non-finite (step size likely too large)."""


class ConfigError(DgmflowError, ValueError):
    """Unknown or inconsistent configuration values."""
