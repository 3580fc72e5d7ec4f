"""Exception types shared across the package."""


class CoverIdealsError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(CoverIdealsError, ValueError):
    """Operands live in polynomial rings with different variable counts."""


class ValidationError(CoverIdealsError, ValueError):
    """A value violates one of its structural invariants."""


class SizeGuardError(CoverIdealsError):
    """An exact enumeration was refused because the instance is too large."""


class InconclusiveError(CoverIdealsError):
    """No available route can decide the requested verdict."""


class NoLinearQuotientsError(CoverIdealsError):
    """The ideal admits no linear-quotient ordering, so the value is undefined."""


class OracleDisagreementError(CoverIdealsError):
    """Independent computation routes returned different results."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
