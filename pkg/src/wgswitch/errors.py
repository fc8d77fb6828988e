"""Exception types shared across the package."""


class WgswitchError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(WgswitchError):
    """Invalid model, domain, or run configuration."""


class PoleError(WgswitchError):
    """Gamma function evaluated at (or within machine tolerance of) a pole."""


class DegenerateParameterError(WgswitchError):
    """Hypergeometric parameters outside the supported family (e.g. c at a pole)."""


class NonConvergenceError(WgswitchError):
    """A series or iteration failed to reach tolerance within its cap."""


class StepUnderflowError(WgswitchError):
    """The adaptive step controller stalled below the minimum step size."""


class BoundaryError(WgswitchError):
    """Coupling does not vanish at the domain boundaries as required."""


class DegenerateError(WgswitchError):
    """Operation undefined for the degenerate parameter combination."""


class DivisionError(WgswitchError):
    """All samples of a diagnostic were degenerate (zero-by-zero division)."""


class DimensionError(WgswitchError):
    """State vector has the wrong number of components."""
