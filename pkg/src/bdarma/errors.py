"""Exception types shared across the package."""


class BdarmaError(Exception):
    """Base class for all library errors."""


class ZeroComponent(BdarmaError):
    """A share that must be strictly positive is zero (or negative)."""


class IncompatibleComposition(BdarmaError):
    """Two compositions with mismatched labels or reference parts."""


class DomainError(BdarmaError):
    """An argument lies outside the mathematical domain of an operation."""


class OutOfRange(BdarmaError):
    """A time index outside the range an operation supports."""


class InitializationError(BdarmaError):
    """Sampler target not finite at the initial point."""


class SingularDesign(BdarmaError):
    """Rank-deficient regression design."""


class InsufficientData(BdarmaError):
    """Too few observations for the requested fit or test."""


class InsufficientHistory(BdarmaError):
    """Not enough past observations for a seasonal copy rule."""


class DegenerateSeries(BdarmaError):
    """A constant (zero-variance) series where variation is required."""


class SingularCovariance(BdarmaError):
    """A covariance matrix that cannot be inverted."""


class ProtocolError(BdarmaError):
    """Backtest protocol inconsistent with the available data."""


class GapError(BdarmaError):
    """Missing calendar month in an ingested dataset."""


class DatasetError(BdarmaError):
    """Malformed dataset file (bad value, bad header, bad date)."""


class SchemaError(BdarmaError):
    """Malformed parameter or configuration file."""
