"""Exception hierarchy shared by every module."""


class TangleError(Exception):
    """Base class for all package errors."""


class InvalidCoordinate(TangleError, ValueError):
    """A Dehn coordinate does not describe a valid arc system."""


class InvariantError(InvalidCoordinate):
    """A coordinate breaks one of its own invariants (parity, signs, shape)."""


class ParityError(InvariantError):
    pass


class ClosedComponentError(InvalidCoordinate):
    pass


class ComponentCountError(InvalidCoordinate):
    pass


class NotAViolation(TangleError, ValueError):
    pass


class NoWindowIntersection(TangleError, ValueError):
    pass


class NotNormal(TangleError, ValueError):
    pass


class NotMinimal(TangleError, ValueError):
    pass


class TripwireError(TangleError, AssertionError):
    """A property claimed for all tangles failed on a concrete input."""


class ParseError(TangleError, ValueError):
    """Text that is not a coordinate; ``position`` is the offending offset."""

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} at position {position}")
        self.position = position
