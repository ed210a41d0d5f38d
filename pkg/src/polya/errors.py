"""Exception types shared across the package."""


class PolyaError(ValueError):
    """Base class for all errors raised by this package."""


class ParseError(PolyaError):
    """Malformed input text (cycle notation, group specs, compositions)."""


class LimitExceededError(PolyaError):
    """A computation would exceed a configured size limit."""
