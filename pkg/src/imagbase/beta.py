"""Greedy digit expansions of reals in real bases B > 1 and -B < -1.

Positive bases iterate ``T(x) = Bx - floor(Bx)`` on ``[0, 1)`` and emit
``floor(Bx)`` each step.  Negative bases iterate
``T(x) = -Bx - floor(-Bx - l)`` on ``[l, r) = [-B/(B+1), 1/(B+1))`` and emit
``floor(-Bx - l)``.  The input is first divided by a power of the base so it
lands in the interval; the first digit then sits at exponent ``p - 1``.

Rational inputs in rational bases run on exact integer numerator/denominator
pairs.  Anything involving an :class:`~imagbase.reals.Irrational` or an mpf
runs in mpmath at ``ctx.precision_bits`` with a guarded floor.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import mpmath

from .bases import BaseSpec, Family
from .errors import UnsupportedBase
from .numeral import Numeral
from .reals import (
    DEFAULT_CONTEXT,
    PrecisionContext,
    Real,
    guarded_floor,
    is_exact,
    to_mpf,
)


@dataclass(frozen=True)
class BetaRange:
    l: Union[Fraction, mpmath.mpf]
    r: Union[Fraction, mpmath.mpf]


@dataclass(frozen=True)
class ExpansionResult:
    numeral: Numeral
    terminated: bool
    prescale_p: int
    scaled: Union[Fraction, mpmath.mpf, None] = None

    def __str__(self):
        return str(self.numeral)


def beta_range(magnitude):
    """Fundamental interval for the negative base ``-magnitude``."""
    return BetaRange(-magnitude / (magnitude + 1), 1 / (magnitude + 1))


def _floor(v) -> int:
    return math.floor(v) if isinstance(v, (int, Fraction)) else int(mpmath.floor(v))


def transform_pos(x, B):
    return B * x - _floor(B * x)


def transform_neg(x, B, l):
    return -B * x - _floor(-B * x - l)


def _exact_mode(x: Real, base: BaseSpec) -> bool:
    return is_exact(x) and base.is_exact


def beta_expand_pos(x: Real, base: BaseSpec, ctx: PrecisionContext = DEFAULT_CONTEXT) -> ExpansionResult:
    if base.family not in (Family.POS_INT, Family.POS_REAL):
        raise UnsupportedBase(f"beta_expand_pos needs a base > 1, got {base}")
    if _exact_mode(x, base):
        x = Fraction(x)
        negative = x < 0
        digits, p, scaled, terminated = _pos_exact(abs(x), base.value, ctx.max_frac_digits)
    else:
        with mpmath.workprec(ctx.precision_bits):
            xv = to_mpf(x, ctx.precision_bits)
            negative = xv < 0
            digits, p, scaled, terminated = _pos_mp(abs(xv), to_mpf(base.value, ctx.precision_bits), ctx)
    return ExpansionResult(Numeral.from_digits(base, digits, negative=negative), terminated, p, scaled)


def _pos_exact(x: Fraction, B: Fraction, max_frac: int):
    bn, bd = B.numerator, B.denominator
    num, den = x.numerator, x.denominator
    p = 0
    while num >= den:
        p += 1
        num, den = num * bd, den * bn
    g = math.gcd(num, den)
    num, den = num // g, den // g
    scaled = Fraction(num, den)
    digits = {}
    exp = p - 1
    while num and exp >= -max_frac:
        yn, yd = bn * num, bd * den
        d = yn // yd
        num, den = yn - d * yd, yd
        g = math.gcd(num, den)
        if g > 1:
            num //= g
            den //= g
        assert 0 <= num < den
        if d:
            digits[exp] = d
        exp -= 1
    return digits, p, scaled, num == 0


def _pos_mp(x, B, ctx: PrecisionContext):
    tol = ctx.tolerance
    p = 0
    scaled = x
    while scaled >= 1:
        p += 1
        scaled = x / B ** p
    digits = {}
    exp = p - 1
    cur = scaled
    while cur != 0 and exp >= -ctx.max_frac_digits:
        y = B * cur
        d = guarded_floor(y, tol)
        cur = y - d
        if abs(cur) <= tol:
            cur = mpmath.mpf(0)
        assert 0 <= cur < 1
        if d:
            digits[exp] = d
        exp -= 1
    return digits, p, scaled, cur == 0


def beta_expand_neg(x: Real, base: BaseSpec, ctx: PrecisionContext = DEFAULT_CONTEXT) -> ExpansionResult:
    """Expansion in the negative base ``base`` (NegInt or NegReal).

    A raw digit equal to the base magnitude only occurs at the left endpoint
    ``l``, which is a fixed point of the transform.  Each such digit is
    written as ``B - 1`` followed by an inserted ``0``, so the stream
    ``888...`` in base -8 comes out as ``7070...``.
    """
    if base.family not in (Family.NEG_INT, Family.NEG_REAL):
        raise UnsupportedBase(f"beta_expand_neg needs a base < -1, got {base}")
    if _exact_mode(x, base):
        digits, p, scaled, terminated = _neg_exact(Fraction(x), -base.value, ctx.max_frac_digits)
    else:
        with mpmath.workprec(ctx.precision_bits):
            digits, p, scaled, terminated = _neg_mp(
                to_mpf(x, ctx.precision_bits), -to_mpf(base.value, ctx.precision_bits), ctx)
    return ExpansionResult(Numeral.from_digits(base, digits), terminated, p, scaled)


def _neg_exact(x: Fraction, B: Fraction, max_frac: int):
    bn, bd = B.numerator, B.denominator
    s = bn + bd
    # x / (-B)^p as num/den, den > 0; in [l, r) iff -bn*den <= num*s < bd*den
    num, den = x.numerator, x.denominator
    p = 0
    while not -bn * den <= num * s < bd * den:
        p += 1
        num, den = num * bd, den * -bn
        if den < 0:
            num, den = -num, -den
    g = math.gcd(num, den)
    num, den = num // g, den // g
    scaled = Fraction(num, den)
    digits = {}
    exp = p - 1
    while num and exp >= -max_frac:
        # y = -B x;  d = floor(y - l) with l = -bn/s
        yn, yd = -bn * num, bd * den
        d = (yn * s + bn * yd) // (yd * s)
        num, den = yn - d * yd, yd
        if bd > 1:
            g = math.gcd(num, den)
            num, den = num // g, den // g
        assert -bn * den <= num * s < bd * den, "transform left [l, r)"
        if bd == 1 and d == bn:
            digits[exp] = d - 1
            exp -= 2
            continue
        if d:
            digits[exp] = d
        exp -= 1
    return digits, p, scaled, num == 0


def _neg_mp(x, B, ctx: PrecisionContext):
    tol = ctx.tolerance
    l = -B / (B + 1)
    r = 1 / (B + 1)
    p = 0
    scaled = x
    while not l <= scaled < r:
        p += 1
        scaled = x / (-B) ** p
    integral_base = abs(B - mpmath.nint(B)) <= tol
    digits = {}
    exp = p - 1
    cur = scaled
    while cur != 0 and exp >= -ctx.max_frac_digits:
        y = -B * cur
        d = guarded_floor(y - l, tol)
        cur = y - d
        if abs(cur) <= tol:
            cur = mpmath.mpf(0)
        elif cur < l:
            cur = l
        assert l <= cur < r + tol, "transform left [l, r)"
        if integral_base and d == int(mpmath.nint(B)):
            digits[exp] = d - 1
            exp -= 2
            continue
        if d:
            digits[exp] = d
        exp -= 1
    return digits, p, scaled, cur == 0


def expand_real(x: Real, base: BaseSpec, ctx: PrecisionContext = DEFAULT_CONTEXT) -> ExpansionResult:
    if base.family in (Family.POS_INT, Family.POS_REAL):
        return beta_expand_pos(x, base, ctx)
    if base.family in (Family.NEG_INT, Family.NEG_REAL):
        return beta_expand_neg(x, base, ctx)
    raise UnsupportedBase(f"{base} is not a real base")
