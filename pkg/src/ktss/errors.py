"""Exception types raised across the package."""


class KTSSError(ValueError):
    """Base class for all errors raised by :mod:`ktss`."""


class LengthViolation(KTSSError):
    """A component element has the wrong length for the window size."""


class KMismatch(KTSSError):
    """Two vectors with different window sizes were combined."""


class SizeGuard(KTSSError):
    """A materialization would exceed the configured size cap."""


class NotCanonical(KTSSError):
    """A vector carrying junk elements was passed where a canonical one is required."""


class InvalidTarget(KTSSError):
    """A requested cluster count is not a positive integer."""


class UnreachedTargetWarning(UserWarning):
    """The dendrogram cannot be cut down to the requested number of clusters."""
