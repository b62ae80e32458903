"""Exception types raised across the package."""

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)


class TopoIndexError(ValueError):
    """Base class for all input and domain errors."""


class SelfLoop(TopoIndexError):
    pass


class DuplicateEdge(TopoIndexError):
    pass


class VertexOutOfRange(TopoIndexError):
    pass


class Disconnected(TopoIndexError):
    pass


class SizeTooSmall(TopoIndexError):
    pass


class InvalidR(TopoIndexError):
    pass


class DomainError(TopoIndexError):
    pass


class TooLarge(TopoIndexError):
    pass


class ParseError(TopoIndexError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class IndexOverflow(OverflowError):
    """A count left the signed 64-bit range."""


def checked(value: int) -> int:
    """Return ``value`` unchanged, or raise if it does not fit in int64."""
    if not INT64_MIN <= value <= INT64_MAX:
        raise IndexOverflow(f"value {value} exceeds the signed 64-bit range")
    return value


def checked_mul(*factors: int) -> int:
    """Product of ``factors`` with every partial product range-checked."""
    result = 1
    for f in factors:
        result = checked(result * f)
    return result
