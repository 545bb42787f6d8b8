"""Exception types shared across the library."""


class DunklError(Exception):
    """Base class for all library errors."""


class DomainError(DunklError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class RangeError(DunklError, ValueError):
    """An argument exceeds the validated numerical range of an algorithm.

    Typically signals the caller to shrink a quadrature box or raise an
    explicit ceiling.
    """


class UsageError(DunklError, ValueError):
    """The operation was invoked in a way its contract does not permit
    (wrong regime, mismatched dimensions, malformed config)."""


class CalibrationError(DunklError, RuntimeError):
    """A constructed object failed its internal consistency gate."""
