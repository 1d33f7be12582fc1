"""Exception types shared across the package."""


class DcoresError(Exception):
    """Base class for all package errors."""


class ParameterError(DcoresError, ValueError):
    """An argument is outside the domain an operation accepts."""


class CoordinateError(DcoresError, IndexError):
    """A box coordinate lies outside the Young diagram."""


class UnboundedError(DcoresError, ValueError):
    """No finite beta-set bound can be derived, so the family may be infinite."""


class EngineDisagreement(DcoresError, RuntimeError):
    """Two enumeration engines returned different partition sets."""
