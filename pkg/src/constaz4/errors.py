"""Exception types shared across the library."""


class ConstaZ4Error(Exception):
    """Base class for all library errors."""


class NonUnitError(ConstaZ4Error):
    """An operation required a unit of R (or Z4) and got a non-unit."""


class ParseError(ConstaZ4Error):
    """Malformed polynomial or ring-element text."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class TwistUndefinedError(ConstaZ4Error):
    """The substitution x -> lambda*x needs lambda^2 = 1."""


class EvenLengthError(ConstaZ4Error):
    """x^n - 1 factorization machinery only applies to odd n."""


class LiftCheckError(ConstaZ4Error):
    """A lifted factor failed its mod-2 or divisibility self-check."""


class BadPartitionError(ConstaZ4Error):
    """Factor groups do not form a partition of the factor set."""


class DegreeError(ConstaZ4Error):
    """Polynomial degree exceeds what the ambient quotient ring allows."""


class LengthMismatchError(ConstaZ4Error):
    """Vectors of different lengths were combined."""


class EmptyVectorError(ConstaZ4Error):
    """Shift of an empty vector."""


class ZeroCodeError(ConstaZ4Error):
    """Minimum distance of the zero code is undefined."""


class BudgetExceededError(ConstaZ4Error):
    """Codeword enumeration would exceed the allowed budget."""


class TooLargeError(ConstaZ4Error):
    """Full weight enumeration refused above the size threshold."""
