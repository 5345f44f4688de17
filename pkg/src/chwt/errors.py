"""Exception types raised by chwt."""


class ChwtError(Exception):
    """Base class for library errors."""


class CapacityError(ChwtError, ValueError):
    """A dense construction was requested beyond the supported size."""


class StructureError(ChwtError, ValueError):
    """Two matrices (or permutations) do not have the required structure."""


class SignalFormatError(ChwtError, ValueError):
    """A signal file could not be parsed or has an invalid length."""


class ResourceError(ChwtError, RuntimeError):
    """A worker pool could not be started."""
