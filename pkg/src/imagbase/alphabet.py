"""The 36-symbol digit alphabet: 0-9 then A-Z."""

from __future__ import annotations

import string

from .errors import InvalidCharacter, NumeralError

STANDARD_SYMBOLS = string.digits + string.ascii_uppercase


class DigitAlphabet:
    """An ordered set of digit symbols; position in the order is the digit value.

    The default order is the standard one.  Any permutation of the 36 symbols
    is accepted, which is what the text codec uses as its key.
    """

    __slots__ = ("symbols", "_values")

    def __init__(self, symbols: str = STANDARD_SYMBOLS):
        symbols = symbols.upper()
        if sorted(symbols) != sorted(STANDARD_SYMBOLS):
            raise NumeralError("alphabet must be a permutation of 0-9A-Z")
        self.symbols = symbols
        self._values = {c: i for i, c in enumerate(symbols)}

    def __len__(self) -> int:
        return len(self.symbols)

    def __eq__(self, other):
        return isinstance(other, DigitAlphabet) and self.symbols == other.symbols

    def __hash__(self):
        return hash(self.symbols)

    def __repr__(self):
        return f"DigitAlphabet({self.symbols!r})"

    def value_of(self, char: str) -> int:
        try:
            return self._values[char.upper()]
        except KeyError:
            raise InvalidCharacter(f"{char!r} is not a digit") from None

    def symbol_of(self, value: int) -> str:
        if not 0 <= value < len(self.symbols):
            raise InvalidCharacter(f"no symbol for digit value {value}")
        return self.symbols[value]


STANDARD = DigitAlphabet()
