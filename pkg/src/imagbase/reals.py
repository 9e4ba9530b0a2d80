"""Real scalars: exact rationals, or irrationals evaluated on demand with mpmath.

Anything that is an ``int`` or ``Fraction`` is handled exactly.  Irrational
constants such as pi are wrapped in :class:`Irrational`, which can be
evaluated at any binary precision; that is how a computation can be repeated
at doubled precision to check that its digits are stable.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

import mpmath

from .errors import NumeralError


@dataclass(frozen=True)
class PrecisionContext:
    precision_bits: int = 256
    max_frac_digits: int = 32

    def __post_init__(self):
        if self.precision_bits <= 0 or self.max_frac_digits <= 0:
            raise NumeralError("precision_bits and max_frac_digits must be positive")

    @property
    def tolerance(self) -> mpmath.mpf:
        # floor() guard for values sitting on an integer boundary
        with mpmath.workprec(self.precision_bits):
            return mpmath.ldexp(1, -(self.precision_bits // 2))


DEFAULT_CONTEXT = PrecisionContext()


class Irrational:
    """A real number known only through an mpmath thunk.

    ``thunk`` is called inside :func:`mpmath.workprec` and must return an mpf
    computed at the current working precision.  Equality and hashing go by
    ``label``.
    """

    __slots__ = ("label", "_thunk")

    def __init__(self, label: str, thunk: Callable[[], mpmath.mpf]):
        self.label = label
        self._thunk = thunk

    def evaluate(self, bits: int) -> mpmath.mpf:
        with mpmath.workprec(bits + 16):
            value = +self._thunk()
        with mpmath.workprec(bits):
            return +value

    def __neg__(self) -> Irrational:
        thunk = self._thunk
        label = self.label[1:] if self.label.startswith("-") else "-" + self.label
        return Irrational(label, lambda: -thunk())

    def square(self) -> Irrational:
        thunk = self._thunk
        return Irrational(f"({self.label})^2", lambda: thunk() ** 2)

    def __eq__(self, other):
        return isinstance(other, Irrational) and other.label == self.label

    def __hash__(self):
        return hash(("Irrational", self.label))

    def __repr__(self):
        return f"Irrational({self.label!r})"

    def __str__(self):
        return self.label


PI = Irrational("pi", lambda: mpmath.pi)

Real = Union[int, Fraction, Irrational, mpmath.mpf]


def is_exact(x: Real) -> bool:
    return isinstance(x, (int, Fraction))


def to_mpf(x: Real, bits: int) -> mpmath.mpf:
    if isinstance(x, Irrational):
        return x.evaluate(bits)
    with mpmath.workprec(bits):
        if isinstance(x, Fraction):
            return mpmath.mpf(x.numerator) / x.denominator
        return mpmath.mpf(x)


def mpf_to_fraction(x: mpmath.mpf) -> Fraction:
    """Exact rational value of a binary float."""
    man, exp = x.man_exp
    if man == 0:
        return Fraction(0)
    return Fraction(int(man)) * Fraction(2) ** int(exp)


def sign(x: Real, bits: int = 128) -> int:
    if is_exact(x):
        return (x > 0) - (x < 0)
    v = to_mpf(x, bits)
    return (v > 0) - (v < 0)


def ceil_real(x: Real, bits: int = 128) -> int:
    if is_exact(x):
        return math.ceil(x)
    return int(mpmath.ceil(to_mpf(x, bits)))


def guarded_floor(v: mpmath.mpf, tol: mpmath.mpf) -> int:
    """floor(v), except values within ``tol`` below an integer round up to it."""
    k = int(mpmath.floor(v))
    if (k + 1) - v <= tol:
        k += 1
    return k
