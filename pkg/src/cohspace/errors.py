"""Exception types shared across the package."""


class CohSpaceError(Exception):
    """Base class for all errors raised by cohspace."""


class NotASubset(CohSpaceError):
    pass


class CodeOutOfRange(CohSpaceError):
    pass


class TooLarge(CohSpaceError):
    pass


class DuplicateLabel(CohSpaceError):
    pass


class IllConditioned(CohSpaceError):
    pass


class DegenerateSpectrum(CohSpaceError):
    pass


class InadequateTruncation(CohSpaceError):
    pass


class DimensionMismatch(CohSpaceError):
    pass


class NotInSpace(CohSpaceError):
    pass


class NotADensityMatrix(CohSpaceError):
    pass


class NotTraceClass(CohSpaceError):
    pass


class QuadratureNotConverged(CohSpaceError):
    pass


class ParseError(CohSpaceError):
    """Malformed input; ``field`` names the offending location when known."""

    def __init__(self, message, field=None):
        self.field = field
        super().__init__(f"{field}: {message}" if field else message)


class TruncationWarning(UserWarning):
    """A Fock cutoff below the recommended size was explicitly allowed."""
