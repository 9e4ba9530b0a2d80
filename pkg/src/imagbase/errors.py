"""Exception hierarchy.

Every error raised for bad input or an unsupported operation derives from
:class:`NumeralError`, which itself is a :class:`ValueError`.
"""


class NumeralError(ValueError):
    pass


class MalformedText(NumeralError):
    pass


class InvalidDigit(NumeralError):
    pass


class SignNotAllowed(NumeralError):
    pass


class InvalidBase(NumeralError):
    pass


class HasFraction(NumeralError):
    pass


class BaseMismatch(NumeralError):
    pass


class UnsupportedBase(NumeralError):
    """Operation is not defined for this base family (e.g. carries in base pi*i)."""


class NonIntegerCoefficient(UnsupportedBase):
    pass


class DivisorZero(NumeralError, ZeroDivisionError):
    pass


class InvalidCharacter(NumeralError):
    pass


class DigitOutOfRange(NumeralError):
    pass


class InexactConversion(NumeralError):
    pass
