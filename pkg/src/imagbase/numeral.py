"""Numerals: a base plus a sparse map from exponent to digit.

Text grammar (case-insensitive on input, uppercase on output)::

    [-] DIGIT+ ("." DIGIT+)?

The sign is only accepted for positive bases; negative and imaginary bases
represent every value without one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping

import mpmath

from .alphabet import STANDARD, DigitAlphabet
from .bases import BaseSpec, Family
from .complexnum import ExactComplex
from .errors import InvalidDigit, MalformedText, SignNotAllowed
from .reals import DEFAULT_CONTEXT, PrecisionContext, mpf_to_fraction, to_mpf

_NUMERAL_RE = re.compile(r"^(-)?([0-9A-Za-z]+)(?:\.([0-9A-Za-z]+))?$")


@dataclass(frozen=True)
class Numeral:
    """An immutable, canonical numeral.

    ``digits`` holds ``(exponent, digit)`` pairs for the nonzero digits only,
    highest exponent first, so two numerals of equal value in the same base
    compare equal.  Build instances with :meth:`from_digits`.
    """

    base: BaseSpec
    digits: tuple = ()
    negative: bool = False

    @classmethod
    def from_digits(cls, base: BaseSpec, digits: Mapping[int, int] | Iterable,
                    negative: bool = False) -> Numeral:
        items = digits.items() if isinstance(digits, Mapping) else digits
        cleaned = {}
        for exp, d in items:
            if not 0 <= d < base.digit_count:
                raise InvalidDigit(f"digit {d} at exponent {exp} outside [0, {base.digit_count}) for base {base}")
            if d:
                cleaned[exp] = d
        if negative and not base.allows_sign:
            raise SignNotAllowed(f"base {base} does not use a sign")
        ordered = tuple(sorted(cleaned.items(), reverse=True))
        return cls(base, ordered, negative and bool(ordered))

    @classmethod
    def zero(cls, base: BaseSpec) -> Numeral:
        return cls(base)

    def as_dict(self) -> dict[int, int]:
        return dict(self.digits)

    def digit(self, exp: int) -> int:
        for e, d in self.digits:
            if e == exp:
                return d
        return 0

    @property
    def is_zero(self) -> bool:
        return not self.digits

    @property
    def high(self) -> int | None:
        return self.digits[0][0] if self.digits else None

    @property
    def low(self) -> int | None:
        return self.digits[-1][0] if self.digits else None

    def shift(self, k: int) -> Numeral:
        """Multiply by base**k."""
        return Numeral(self.base, tuple((e + k, d) for e, d in self.digits), self.negative)

    def truncate(self, max_frac: int) -> Numeral:
        kept = tuple((e, d) for e, d in self.digits if e >= -max_frac)
        return Numeral(self.base, kept, self.negative and bool(kept))

    def __str__(self):
        return format_numeral(self)


def parse_numeral(text: str, base: BaseSpec, alphabet: DigitAlphabet = STANDARD) -> Numeral:
    m = _NUMERAL_RE.match(text.strip())
    if not m:
        raise MalformedText(f"not a numeral: {text!r}")
    sign, whole, frac = m.groups()
    if sign and not base.allows_sign:
        raise SignNotAllowed(f"base {base} does not use a sign")
    digits = {}
    for k, ch in enumerate(reversed(whole)):
        digits[k] = alphabet.value_of(ch)
    for k, ch in enumerate(frac or "", start=1):
        digits[-k] = alphabet.value_of(ch)
    return Numeral.from_digits(base, digits, negative=bool(sign))


def format_numeral(n: Numeral, alphabet: DigitAlphabet = STANDARD) -> str:
    if n.is_zero:
        return alphabet.symbol_of(0)
    d = dict(n.digits)
    top = max(n.high, 0)
    bottom = min(n.low, 0)
    whole = "".join(alphabet.symbol_of(d.get(e, 0)) for e in range(top, -1, -1))
    text = "-" + whole if n.negative else whole
    if bottom < 0:
        text += "." + "".join(alphabet.symbol_of(d.get(e, 0)) for e in range(-1, bottom - 1, -1))
    return text


def _power_sum(terms, q: Fraction) -> Fraction:
    """Sum of d * q**k over (k, d) pairs, with one Fraction built at the end."""
    if not terms:
        return Fraction(0)
    kmin = min(k for k, _ in terms)
    kmax = max(k for k, _ in terms)
    p, r = q.numerator, q.denominator
    num = sum(d * p ** (k - kmin) * r ** (kmax - k) for k, d in terms)
    den = r ** (kmax - kmin)
    # times q**kmin
    if kmin >= 0:
        return Fraction(num * p ** kmin, den * r ** kmin)
    return Fraction(num * r ** -kmin, den * p ** -kmin)


def eval_numeral(n: Numeral, ctx: PrecisionContext = DEFAULT_CONTEXT) -> ExactComplex:
    """Sum of digit * base**exponent.

    Exact when the base is rational.  For an irrational base the powers are
    computed with mpmath at ``ctx.precision_bits`` and the binary result is
    returned as an exact Fraction.
    """
    base = n.base
    if base.is_exact:
        if base.family is Family.IMAGINARY:
            # (ni)^(2k) = (-n^2)^k and (ni)^(2k+1) = ni (-n^2)^k
            q = -base.value ** 2
            even = [(e // 2, d) for e, d in n.digits if e % 2 == 0]
            odd = [((e - 1) // 2, d) for e, d in n.digits if e % 2]
            total = ExactComplex(_power_sum(even, q), base.value * _power_sum(odd, q))
        else:
            total = ExactComplex(_power_sum(n.digits, base.value))
    else:
        bits = ctx.precision_bits
        with mpmath.workprec(bits + 32):
            b = to_mpf(base.value, bits + 32)
            re_sum = mpmath.mpf(0)
            im_sum = mpmath.mpf(0)
            for e, d in n.digits:
                term = d * b ** e
                if base.family is Family.IMAGINARY:
                    quarter = e % 4
                    if quarter == 0:
                        re_sum += term
                    elif quarter == 1:
                        im_sum += term
                    elif quarter == 2:
                        re_sum -= term
                    else:
                        im_sum -= term
                else:
                    re_sum += term
        with mpmath.workprec(bits):
            total = ExactComplex(mpf_to_fraction(+re_sum), mpf_to_fraction(+im_sum))
    return -total if n.negative else total
