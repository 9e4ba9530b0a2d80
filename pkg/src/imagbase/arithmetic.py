"""Digit-level arithmetic in negative integer bases and integer imaginary bases.

Both kinds share one carry rule.  With ``m`` the digit count and ``s`` the
carry stride (1 for base ``-m``, 2 for base ``n*i`` where ``m = n^2``), one
unit at exponent ``k + s`` is worth ``-m`` units at ``k``.  An overflow of
``q*m`` at ``k`` is therefore repaired by subtracting ``q`` at ``k + s``;
``q`` is negative for a negative column, which turns into a borrow.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Mapping, Optional

from .bases import BaseSpec, Family
from .errors import BaseMismatch, DivisorZero, NonIntegerCoefficient, UnsupportedBase
from .imaginary import compress_part, expand_part, split_parts
from .integer import base_to_int, int_to_base
from .numeral import Numeral


@dataclass(frozen=True)
class DivisionResult:
    """``dividend == quotient * divisor + remainder`` holds exactly.

    ``partial_remainder`` is the last partial remainder of a negative-base
    long division in local units (the trailing figure of a worked division);
    ``steps`` records ``(exponent, partial_dividend, quotient_value,
    partial_remainder)`` for every subtraction performed.
    """

    quotient: Numeral
    remainder: Numeral
    exact: bool
    partial_remainder: Optional[Numeral] = None
    steps: tuple = field(default=(), repr=False)


def carry_params(base: BaseSpec) -> tuple[int, int]:
    """``(modulus, stride)`` of the carry rule for ``base``."""
    if base.family is Family.NEG_INT:
        return -int(base.value), 1
    if base.family is Family.IMAGINARY:
        if not base.is_integer_imaginary:
            raise NonIntegerCoefficient(
                f"digit arithmetic needs an integer coefficient; {base} has none")
        n = int(base.value)
        return n * n, 2
    raise UnsupportedBase(f"digit arithmetic is defined for negative and imaginary bases, not {base}")


def normalize(t: Mapping[int, int], base: BaseSpec) -> Numeral:
    """Canonical numeral with the same value as the transient digit map ``t``.

    Columns are repaired from the lowest exponent upward; carries only ever
    move up, so one ascending sweep reaches the fixpoint.
    """
    modulus, stride = carry_params(base)
    digits = defaultdict(int, {e: d for e, d in t.items() if d})
    if not digits:
        return Numeral.zero(base)
    k = min(digits)
    cap = 8 * (max(digits) - k + 64) + sum(abs(d) for d in digits.values()).bit_length() * 64
    steps = 0
    while k <= max(digits):
        d = digits.get(k, 0)
        if not 0 <= d < modulus:
            q, r = divmod(d, modulus)
            digits[k] = r
            digits[k + stride] -= q
        k += 1
        steps += 1
        if steps > cap:
            raise RuntimeError(f"normalization did not settle after {steps} columns")
    return Numeral.from_digits(base, {e: d for e, d in digits.items() if d})


def _same_base(a: Numeral, b: Numeral) -> BaseSpec:
    if a.base != b.base:
        raise BaseMismatch(f"base {a.base} vs base {b.base}")
    carry_params(a.base)
    return a.base


def add(a: Numeral, b: Numeral) -> Numeral:
    base = _same_base(a, b)
    t = defaultdict(int, a.digits)
    for e, d in b.digits:
        t[e] += d
    return normalize(t, base)


def sub(a: Numeral, b: Numeral) -> Numeral:
    base = _same_base(a, b)
    t = defaultdict(int, a.digits)
    for e, d in b.digits:
        t[e] -= d
    return normalize(t, base)


def negate(a: Numeral) -> Numeral:
    return sub(Numeral.zero(a.base), a)


def mul(a: Numeral, b: Numeral) -> Numeral:
    base = _same_base(a, b)
    t = defaultdict(int)
    for ea, da in a.digits:
        for eb, db in b.digits:
            t[ea + eb] += da * db
    return normalize(t, base)


def conjugate(n: Numeral) -> Numeral:
    """Complex conjugate: the real part minus the imaginary part."""
    carry_params(n.base)
    if n.base.family is not Family.IMAGINARY:
        raise UnsupportedBase(f"{n.base} is not an imaginary base")
    parts = split_parts(n)
    return sub(parts.real_part, parts.imag_part)


def _rule3(r: int, divisor: int) -> bool:
    # remainder zero, or opposite in sign to the divisor and smaller in size
    return r == 0 or ((r > 0) != (divisor > 0) and abs(r) < abs(divisor))


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def _long_divide_digits(digits: Mapping[int, int], D: int, B: int, cutoff: int):
    """Long division of a base ``-B`` digit map by the integer ``D``.

    Returns the transient quotient map, the last partial remainder, the
    exponent it belongs to, and the step trace.  Quotient digits are placed
    at the exponent of the last dividend digit brought down.
    """
    quotient = defaultdict(int)
    steps = []
    if not digits:
        return quotient, 0, cutoff, steps
    top = max(digits)
    lowest_nonzero = min(digits)
    R = 0
    started = False
    e = top
    last = e
    while e >= cutoff:
        P = -B * R + digits.get(e, 0)
        last = e
        if not started and abs(P) < abs(D) and e > cutoff:
            # first partial dividend must reach the divisor's size
            R = P
            e -= 1
            continue
        if not started and P != 0 and (P > 0) != (D > 0):
            # opposite signs: two-digit first partial quotient
            found = [(hi, lo) for hi in range(B) for lo in range(B)
                     if _rule3(P - (hi * -B + lo) * D, D)]
            if len(found) > 1:
                raise RuntimeError(f"ambiguous first partial quotient for {P} / {D}: {found}")
            if found:
                hi, lo = found[0]
                v = hi * -B + lo
                quotient[e + 1] += hi
                quotient[e] += lo
            else:
                v = _ceil_div(P, D)
                quotient[e] += v
        else:
            v = _ceil_div(P, D)
            quotient[e] += v
        started = True
        R = P - v * D
        assert _rule3(R, D), (P, v, D, R)
        steps.append((e, P, v, R))
        if R == 0 and e <= lowest_nonzero:
            break
        e -= 1
    return quotient, R, last, steps


def long_divide_neg(dividend: Numeral, divisor: Numeral, max_frac: int = 16) -> DivisionResult:
    """Schoolbook division in a negative integer base.

    Every partial remainder is opposite in sign to the divisor and smaller in
    size; the first partial quotient takes two digits when the first partial
    dividend and the divisor differ in sign.  At most ``max_frac`` fractional
    quotient digits are produced.
    """
    base = _same_base(dividend, divisor)
    if base.family is not Family.NEG_INT:
        raise UnsupportedBase(f"long_divide_neg needs a negative integer base, got {base}")
    if divisor.is_zero:
        raise DivisorZero("division by zero")
    B = -int(base.value)
    shift = max(0, -divisor.low)
    D = base_to_int(divisor.shift(shift))
    q_digits, R, last, steps = _long_divide_digits(dividend.as_dict(), D, B, -(max_frac + shift))
    quotient = normalize(q_digits, base).shift(shift)
    remainder = sub(dividend, mul(quotient, divisor))
    return DivisionResult(quotient, remainder, remainder.is_zero,
                          int_to_base(R, base), tuple(steps))


def _divide_real_divisor(a: Numeral, d: Numeral, max_frac: int):
    # d has only even exponents, i.e. it is a real number
    dc = compress_part(d, 0)
    re = long_divide_neg(compress_part(a, 0), dc, max_frac // 2)
    im = long_divide_neg(compress_part(a, 1), dc, (max_frac + 1) // 2)
    return add(expand_part(re.quotient, a.base, 0), expand_part(im.quotient, a.base, 1))


def _check_division(dividend: Numeral, divisor: Numeral) -> BaseSpec:
    base = _same_base(dividend, divisor)
    if base.family is not Family.IMAGINARY:
        raise UnsupportedBase(f"{base} is not an imaginary base")
    if divisor.is_zero:
        raise DivisorZero("division by zero")
    return base


def _result(dividend, divisor, quotient, steps=()) -> DivisionResult:
    remainder = sub(dividend, mul(quotient, divisor))
    return DivisionResult(quotient, remainder, remainder.is_zero, steps=tuple(steps))


def div(dividend: Numeral, divisor: Numeral, max_frac: int = 16) -> DivisionResult:
    """Divide in an integer imaginary base by splitting into real and imaginary parts.

    A general divisor is first made real by multiplying both operands by its
    conjugate.  A real divisor skips that.  An imaginary divisor ``n*i*y``
    also skips it: the dividend's imaginary part over ``y`` gives the real
    quotient, and its real part over ``y`` gives the imaginary quotient after
    a shift of one column to the right of the radix point.
    """
    base = _check_division(dividend, divisor)
    parts = split_parts(divisor)
    if parts.imag_part.is_zero:
        quotient = _divide_real_divisor(dividend, divisor, max_frac)
    elif parts.real_part.is_zero:
        yc = compress_part(divisor, 1)
        re = long_divide_neg(compress_part(dividend, 1), yc, max_frac // 2)
        im = long_divide_neg(compress_part(dividend, 0), yc, (max_frac - 1) // 2)
        quotient = add(expand_part(re.quotient, base, 0),
                       expand_part(im.quotient, base, 0).shift(-1))
    else:
        c = conjugate(divisor)
        quotient = _divide_real_divisor(mul(dividend, c), mul(divisor, c), max_frac)
    return _result(dividend, divisor, quotient)


def _lattice_value(digits: Mapping[int, int], e: int, modulus: int) -> int:
    # value of the digits at e, e+2, e+4, ... in units of (ni)^e
    return sum(d * (-modulus) ** ((k - e) // 2)
               for k, d in digits.items() if k >= e and (k - e) % 2 == 0)


def div_inline(dividend: Numeral, divisor: Numeral, max_frac: int = 16) -> DivisionResult:
    """Long division carried out directly on the interleaved digits.

    After scaling by the conjugate the divisor is real, so each quotient
    digit at exponent ``e`` only touches the lattice of exponents with the
    parity of ``e``.  Subtractions are done as imaginary-base subtractions on
    the whole running remainder.
    """
    base = _check_division(dividend, divisor)
    modulus, _ = carry_params(base)
    a, d = dividend, divisor
    if not split_parts(divisor).imag_part.is_zero:
        c = conjugate(divisor)
        a, d = mul(dividend, c), mul(divisor, c)
    dc = compress_part(d, 0)
    shift = max(0, -dc.low)
    D = base_to_int(dc.shift(shift))
    d_int = d.shift(2 * shift)
    cutoff = -(max_frac + 2 * shift)

    quotient = defaultdict(int)
    steps = []
    rem = a
    started = {0: False, 1: False}
    e = a.high if not a.is_zero else cutoff - 1
    while e >= cutoff and not rem.is_zero:
        parity = e % 2
        P = _lattice_value(rem.as_dict(), e, modulus)
        if not started[parity] and abs(P) < abs(D) and e - 2 >= cutoff:
            e -= 1
            continue
        started[parity] = True
        v = _ceil_div(P, D)
        if v:
            quotient[e] += v
            scaled = normalize({k + e: dd * v for k, dd in d_int.digits}, base)
            rem = sub(rem, scaled)
        steps.append((e, P, v, P - v * D))
        assert _rule3(P - v * D, D)
        e -= 1
    q = normalize(quotient, base).shift(2 * shift)
    return _result(dividend, divisor, q, steps)
