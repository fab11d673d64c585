"""Exception types shared across the package."""


class LightsOutError(Exception):
    """Base class for errors raised by this package."""


class UnsupportedSizeError(LightsOutError):
    """The requested size is beyond what this operation supports."""


class InternalInvariantError(LightsOutError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class Graph6ParseError(LightsOutError, ValueError):
    """Malformed graph6 input.  ``offset`` is the byte position of the fault."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset
