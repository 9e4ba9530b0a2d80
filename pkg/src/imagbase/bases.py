"""Base descriptions: family, value and digit-set size."""

from __future__ import annotations

import enum
import functools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import InvalidBase, UnsupportedBase
from .reals import PI, Irrational, ceil_real, is_exact, sign, to_mpf

MAX_DIGITS = 36


class Family(enum.Enum):
    POS_INT = "positive integer"
    NEG_INT = "negative integer"
    POS_REAL = "positive real"
    NEG_REAL = "negative real"
    IMAGINARY = "imaginary"


@dataclass(frozen=True)
class BaseSpec:
    """A radix.

    ``value`` is the base itself for the real families and the coefficient
    ``n`` of ``i`` for imaginary bases ``n*i``.  Use :meth:`of` rather than the
    constructor; it classifies the value and computes ``digit_count``.
    """

    family: Family
    value: Union[Fraction, Irrational]
    digit_count: int

    @classmethod
    def of(cls, value, imaginary: bool = False) -> BaseSpec:
        if isinstance(value, (int, str)):
            value = Fraction(value)
        elif isinstance(value, float):
            raise InvalidBase("float bases are ambiguous; pass a Fraction or str")
        if not isinstance(value, (Fraction, Irrational)):
            raise InvalidBase(f"unsupported base value {value!r}")

        exact = is_exact(value)
        s = sign(value)
        if exact:
            magnitude_ok = abs(value) > 1
        else:
            magnitude_ok = abs(to_mpf(value, 128)) > 1
        if not magnitude_ok:
            raise InvalidBase(f"base magnitude must exceed 1, got {value}")

        if imaginary:
            square = value * value if exact else value.square()
            family, count = Family.IMAGINARY, ceil_real(square)
        elif exact and value.denominator == 1:
            family = Family.POS_INT if s > 0 else Family.NEG_INT
            count = abs(int(value))
        else:
            family = Family.POS_REAL if s > 0 else Family.NEG_REAL
            count = ceil_real(value if s > 0 else -value)

        return cls(family, value, count)

    @property
    def renderable(self) -> bool:
        """Whether every digit has a symbol in the 36-character alphabet."""
        return self.digit_count <= MAX_DIGITS

    @property
    def is_exact(self) -> bool:
        return is_exact(self.value)

    @property
    def is_integer_imaginary(self) -> bool:
        return (self.family is Family.IMAGINARY and self.is_exact
                and self.value.denominator == 1)

    @property
    def allows_sign(self) -> bool:
        return self.family in (Family.POS_INT, Family.POS_REAL)

    def __str__(self):
        text = str(self.value)
        if self.family is Family.IMAGINARY:
            text += "i"
        return text


_BASE_RE = re.compile(r"^(-)?(\d+(?:\.\d+)?(?:/\d+)?|pi|π)(\*?i)?$")


def parse_base(text: str) -> BaseSpec:
    """Parse base notation: ``"2"``, ``"-4"``, ``"3.14"``, ``"-5.75i"``, ``"pii"``.

    The magnitude is a decimal (read exactly), a ratio ``p/q`` or ``pi``.
    A trailing ``i`` (or ``*i``) makes the base imaginary.
    """
    m = _BASE_RE.match(text.strip().replace(" ", ""))
    if not m:
        raise InvalidBase(f"cannot parse base {text!r}")
    neg, magnitude, imag = m.groups()
    value = PI if magnitude in ("pi", "π") else Fraction(magnitude)
    if neg:
        value = -value
    return BaseSpec.of(value, imaginary=bool(imag))


@functools.lru_cache(maxsize=256)
def effective_base(base: BaseSpec) -> BaseSpec:
    """The negative real base -n^2 carried by the even positions of base n*i."""
    if base.family is not Family.IMAGINARY:
        raise UnsupportedBase(f"{base} is not an imaginary base")
    n = base.value
    if is_exact(n):
        return BaseSpec.of(-(n * n))
    return BaseSpec.of(-n.square())
