"""Exception hierarchy shared by the library and the CLI."""


class AtomlabError(Exception):
    """Base class for all errors raised by atomlab."""

    exit_code = 1


class InvalidArgument(AtomlabError, ValueError):
    pass


class ParseError(InvalidArgument):
    """Malformed input text. ``line`` is 1-based when known."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapacityError(AtomlabError):
    """A closure or enumeration grew past its configured cap."""

    exit_code = 2

    def __init__(self, message, cap=None):
        self.cap = cap
        super().__init__(message)


class InconsistencyError(AtomlabError):
    """A computed result contradicts a proven theorem. Should never happen."""

    exit_code = 3
