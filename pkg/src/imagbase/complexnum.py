"""Gaussian rationals: complex numbers with exact Fraction parts."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import MalformedText


@dataclass(frozen=True)
class ExactComplex:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, value) -> ExactComplex:
        if isinstance(value, ExactComplex):
            return value
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        return cls(Fraction(value))

    def __add__(self, other):
        other = ExactComplex.coerce(other)
        return ExactComplex(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = ExactComplex.coerce(other)
        return ExactComplex(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return ExactComplex.coerce(other) - self

    def __mul__(self, other):
        o = ExactComplex.coerce(other)
        return ExactComplex(self.re * o.re - self.im * o.im,
                            self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = ExactComplex.coerce(other)
        norm = o.norm()
        if norm == 0:
            raise ZeroDivisionError("complex division by zero")
        num = self * o.conjugate()
        return ExactComplex(num.re / norm, num.im / norm)

    def __rtruediv__(self, other):
        return ExactComplex.coerce(other) / self

    def __neg__(self):
        return ExactComplex(-self.re, -self.im)

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return ExactComplex(1) / self ** -k
        result, base = ExactComplex(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            other = ExactComplex.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def conjugate(self) -> ExactComplex:
        return ExactComplex(self.re, -self.im)

    def norm(self) -> Fraction:
        """Squared modulus."""
        return self.re * self.re + self.im * self.im

    def __str__(self):
        return format_complex(self)


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_complex(z: ExactComplex) -> str:
    """``-5+7i``, ``7i``, ``-i``, ``1/2-3i``, ``0``."""
    if z.im == 0:
        return _fmt(z.re)
    if abs(z.im) == 1:
        imag = "i" if z.im > 0 else "-i"
    else:
        imag = _fmt(z.im) + "i"
    if z.re == 0:
        return imag
    joiner = "" if imag.startswith("-") else "+"
    return f"{_fmt(z.re)}{joiner}{imag}"


_NUM = r"\d+(?:\.\d+)?(?:/\d+)?"
_COMPLEX_RE = re.compile(
    rf"^(?P<re>[-+]?{_NUM})?(?:(?P<isign>[-+])?(?P<im>{_NUM})?i)?$"
)


def parse_complex(text: str) -> ExactComplex:
    """Parse ``a``, ``a+bi``, ``a-bi``, ``bi``, ``i`` with exact rationals.

    ``a`` and ``b`` are integers, decimals or ``p/q`` ratios; all are read
    exactly, never through floating point.
    """
    try:
        return _parse_complex(text)
    except ZeroDivisionError:
        raise MalformedText(f"zero denominator in {text!r}") from None


def _parse_complex(text: str) -> ExactComplex:
    s = text.strip().replace(" ", "")
    m = _COMPLEX_RE.match(s)
    if not s or not m or (m["re"] is None and not s.endswith("i")):
        raise MalformedText(f"cannot parse complex literal {text!r}")
    re_part = Fraction(m["re"]) if m["re"] else Fraction(0)
    if not s.endswith("i"):
        return ExactComplex(re_part)
    if m["re"] is not None and m["isign"] is None:
        # "5i" was matched as re="5" followed by a bare "i"
        if m["im"] is None:
            return ExactComplex(0, re_part)
        raise MalformedText(f"cannot parse complex literal {text!r}")
    im_part = Fraction(m["im"]) if m["im"] else Fraction(1)
    if m["isign"] == "-":
        im_part = -im_part
    return ExactComplex(re_part, im_part)
