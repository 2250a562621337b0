"""Exception types shared across the toolkit."""


class SarakitError(Exception):
    """Base class for all toolkit errors."""


class DimensionError(SarakitError):
    """Array shapes or sizes are inconsistent with the operation."""


class ConfigError(SarakitError):
    """A configuration object is invalid or unsatisfiable."""


class KindError(SarakitError):
    """An operator of the wrong kind was supplied."""


class ZeroSignalError(SarakitError):
    """An operation requires a nonzero signal but received zero."""


class ConvergenceError(SarakitError):
    """An iterative routine failed to converge within its iteration cap."""


class NonPositiveGamma(SarakitError):
    """The weight-law stabilization parameter must be strictly positive."""
