"""Exception types shared across the package."""


class MalaLabError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(MalaLabError):
    """Malformed or inconsistent experiment configuration."""


class NonFiniteEvaluationError(MalaLabError):
    """Energy or gradient evaluated to NaN/inf at a point where a finite
    value is required (e.g. the current chain state)."""

    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class GridCoverageError(MalaLabError):
    """Quadrature grid does not capture enough of the target mass."""

    def __init__(self, message, suggested_bounds=None):
        super().__init__(message)
        self.suggested_bounds = suggested_bounds


class ExpectationNotResolvableError(MalaLabError):
    """One-step expectation has a non-decaying integrand on any bounded grid
    (e.g. exp(theta*U) against raw Gaussian proposals)."""


class LevelSetError(MalaLabError):
    """Operation requires a state or threshold inside the retained level set
    {U < E_h} and got one outside it."""
