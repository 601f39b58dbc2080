"""Exception hierarchy shared across the package."""


class LctkitError(Exception):
    """Base class for all domain errors raised by this package."""


class ParseError(LctkitError):
    """Raised on malformed input text; carries the character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class UnknownVariableError(ParseError):
    pass


class DimensionMismatchError(LctkitError):
    """Operands live in ambient spaces of different dimensions."""


class DomainError(LctkitError):
    """An argument is outside the operation's domain (wrong sign, empty, ...)."""


class TruncationCapError(LctkitError):
    """The truncation policy hit its cap before certification."""


class GuardExceededError(DomainError):
    """An enumeration universe is too large for exhaustive verification."""
