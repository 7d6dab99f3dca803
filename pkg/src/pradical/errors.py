class PradicalError(Exception):
    """Base class for errors raised by this package."""


class UnsupportedError(PradicalError):
    """The requested operation does not apply to this ring/representation."""


class PreconditionError(PradicalError, ValueError):
    """An operation was called outside its stated domain."""


class BoundExceeded(PradicalError):
    """A finite enumeration would exceed the configured size bound."""


class ParseError(PradicalError, ValueError):
    """Malformed JSON input; the message names the offending field."""
