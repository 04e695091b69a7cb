"""Exception hierarchy shared by every module in the package."""


class CodingError(ValueError):
    """Base class for precondition violations raised by this package."""


class NotPrime(CodingError):
    pass


class CapExceeded(CodingError):
    pass


class ContextMismatch(CodingError):
    pass


class ZeroInverse(CodingError, ZeroDivisionError):
    pass


class DivisionByZeroPoly(CodingError, ZeroDivisionError):
    pass


class DegreeZero(CodingError):
    pass


class BothZero(CodingError):
    pass


class WidthTooSmall(CodingError):
    pass


class OutOfRange(CodingError):
    pass


class ReducibleFactor(CodingError):
    pass


class EvenCharacteristic(CodingError):
    pass


class MessageTooLong(CodingError):
    pass


class LengthMismatch(CodingError):
    pass


class WrongArity(CodingError):
    pass


class ZeroCode(CodingError):
    """Raised when a minimum-weight witness is requested for the zero code."""


class SearchSpaceTooLarge(CodingError):
    pass
