"""Exception types shared across the package.

Everything raised on purpose derives from ``TphiError`` so the command line
driver can map library failures to a single exit code.
"""


class TphiError(Exception):
    """Base class for package-specific errors."""


class EmptySumError(TphiError):
    """A multivalued sum needs at least one term."""


class LengthMismatchError(TphiError):
    """Vectors of different lengths were combined."""


class ZeroVectorError(TphiError):
    """An operation required a vector with non-empty support."""


class OddDiscretizationError(TphiError):
    """Discretized enumeration needs an even number of circle points."""


class IndexOutOfRangeError(TphiError):
    """A ground-set index fell outside 1..n."""


class BadArityError(TphiError):
    """A tuple argument had the wrong shape for the requested relation."""


class IdenticallyZeroError(TphiError):
    """The function vanishes everywhere, so it cannot be normalized."""


class CycleDetectedError(TphiError):
    """The strict relation of a poset must be acyclic."""


class UnknownElementError(TphiError):
    """A label does not belong to the poset or complex at hand."""


class SizeCapExceededError(TphiError):
    """A construction would exceed the configured size cap."""


class DimOutOfRangeError(TphiError):
    """A chain-group dimension outside the valid range was requested."""


class EmptyPerpError(TphiError):
    """The requested orthogonal set contains no non-zero vectors."""
