"""Exception hierarchy.

Input problems derive from :class:`ValidationError`; anything that signals a
broken internal invariant derives from :class:`InconsistencyError`. The CLI
maps the two families to distinct exit codes.
"""


class FatGinError(Exception):
    pass


class ValidationError(FatGinError, ValueError):
    pass


class InconsistencyError(FatGinError, RuntimeError):
    pass


class DimensionError(ValidationError):
    """Two divisor classes live on surfaces with different point counts."""


class UnsupportedSurfaceError(ValidationError):
    pass


class InvalidConfigurationError(ValidationError):
    pass


class InsufficientDataError(ValidationError):
    pass


class UnrealizableHilbertError(ValidationError):
    """A Hilbert table that no monomial ideal generated in x, y can have."""


class DivergenceError(InconsistencyError):
    pass


class StaircaseInconsistencyError(InconsistencyError):
    pass
