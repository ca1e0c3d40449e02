"""Exception and warning types shared across the package."""


class ConfigError(ValueError):
    """A scenario configuration file failed to parse or validate."""


class NumericalToleranceError(RuntimeError):
    """A numerical guarantee (truncation, convergence, oracle agreement) failed."""


class TruncationError(NumericalToleranceError):
    """The Fock-space truncation cannot hold the requested state."""


class IntegrationError(NumericalToleranceError):
    """Step halving failed to reach the requested integration tolerance."""


class OracleMismatchError(NumericalToleranceError):
    """Closed-form amplitudes and the integrated trajectory disagree."""


class DegenerateSpectrumError(NumericalToleranceError):
    """Effective frequencies are degenerate or complex beyond round-off."""


class UndefinedMeasureError(NumericalToleranceError):
    """A measure is undefined for the given state (e.g. zero mean photon number)."""


class TruncationWarning(UserWarning):
    """Noticeable population at the truncation edge; results may be degraded."""
