"""Exception types shared across the package."""


class LseBenchError(Exception):
    """Base class for all package-specific failures."""


class IllConditioned(LseBenchError):
    """A Gram matrix is too close to singular to solve reliably.

    Raised when the condition number of A^H A exceeds the solve
    threshold, which signals near-coincident frequencies.
    """


class Singular(LseBenchError):
    """An information matrix could not be inverted."""


class DegenerateCovariance(LseBenchError):
    """Eigendecomposition of a sample covariance failed to converge."""


class ConfigError(LseBenchError):
    """An experiment configuration document is invalid.

    The message names the offending key.
    """

    def __init__(self, key: str, reason: str):
        self.key = key
        self.reason = reason
        super().__init__(f"config key '{key}': {reason}")
