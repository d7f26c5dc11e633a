class TvpsError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameter(TvpsError, ValueError):
    pass


class MalformedLabeling(TvpsError, ValueError):
    pass


class VerificationError(TvpsError):
    """A construction produced a labeling that failed verification."""


class CapacityError(TvpsError):
    pass


class UnsupportedLabeling(TvpsError, ValueError):
    pass


class InvalidWitness(TvpsError, ValueError):
    pass


class EnumerationRefused(TvpsError):
    pass
