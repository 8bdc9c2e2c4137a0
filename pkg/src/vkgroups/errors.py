"""Exception hierarchy shared by the library and the command line."""


class VKError(Exception):
    """Base class for every error raised by vkgroups."""


class ParseError(VKError, ValueError):
    """Malformed textual input. ``position`` is a 0-based character offset."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class ValidationError(VKError, ValueError):
    """Input parsed but violates a structural invariant (e.g. knot code pairing)."""


class PreconditionError(VKError, ValueError):
    """Operation is undefined for this input (e.g. l_y(r) not +-1)."""


class InvariantError(VKError, RuntimeError):
    """An internal postcondition failed. Always a bug."""
