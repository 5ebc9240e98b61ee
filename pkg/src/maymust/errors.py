"""Exception types shared across the package."""


class MayMustError(Exception):
    """Base class for all errors raised by this package."""


class UnknownArgumentError(MayMustError):
    """An operation referenced an argument the framework does not declare."""


class DomainMismatchError(MayMustError):
    """A labelling was used outside the domain an operation requires."""


class GraphMismatchError(MayMustError):
    """Two frameworks were compared that do not share the same attack graph."""


class ResourceCapError(MayMustError):
    """An enumeration would exceed the configured size cap."""


class NonMonotoneStepError(MayMustError):
    """A fixpoint iteration step lost information instead of gaining it."""


class ParseError(MayMustError):
    """An instance document is malformed; carries the offending line."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
