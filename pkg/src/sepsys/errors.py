"""Shared exception types."""


class SepsysError(Exception):
    """Base class for all library errors."""


class ParseError(SepsysError):
    """Malformed input file; carries file name and line number when known."""

    def __init__(self, message, filename=None, line=None):
        self.filename = filename
        self.line = line
        loc = ""
        if filename is not None:
            loc = f"{filename}:"
            if line is not None:
                loc += f"{line}:"
            loc += " "
        super().__init__(loc + message)


class GuardExceeded(SepsysError):
    """An enumeration would exceed the configured safety guard."""


class SearchTimeout(SepsysError):
    """Exact search exceeded its time limit."""
