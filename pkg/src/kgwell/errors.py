"""Exception types shared across the package."""


class KgwellError(Exception):
    """Base class for all package-specific errors."""


class DegenerateChannelError(KgwellError):
    """The outside momentum is (numerically) zero: |E - V0| = mc^2.

    Step reflection/transmission coefficients are singular there; callers
    should perturb the momentum and retry.
    """


class OutOfDomainError(KgwellError):
    """Requested point lies outside the bound-state domain (q is real)."""


class DivergentSeriesError(KgwellError):
    """The closed-form scattering series was requested where it diverges."""


class QuadratureUnderflowError(KgwellError):
    """The quadrature range captures too little of the momentum envelope."""


class InstabilityDetectedError(KgwellError):
    """The finite-difference field grew beyond any physically plausible bound."""


class ConfigError(KgwellError):
    """A run configuration file is malformed or violates an invariant."""
