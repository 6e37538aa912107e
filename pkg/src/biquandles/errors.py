"""Exception hierarchy shared by every module."""


class BiquandleError(Exception):
    """Base class for errors raised by this package."""


class DomainError(BiquandleError, ValueError):
    """An argument lies outside the domain of an operation."""


class StructuralError(BiquandleError, ValueError):
    """A structure lacks an axiom the operation depends on (e.g. B2)."""


class CapacityError(BiquandleError, RuntimeError):
    """A size or work budget was exceeded."""


class ParseError(BiquandleError, ValueError):
    """Malformed text input.  ``line`` and ``offset`` are 1-based when known."""

    def __init__(self, message, line=None, offset=None):
        self.line = line
        self.offset = offset
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"offset {offset}")
        if where:
            message = f"{message} ({', '.join(where)})"
        super().__init__(message)


class ValidationError(BiquandleError, ValueError):
    """A loaded object violates an invariant."""
