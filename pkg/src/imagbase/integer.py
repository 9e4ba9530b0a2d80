"""Integers in positive and negative integer bases by repeated division."""

from __future__ import annotations

from .bases import BaseSpec, Family
from .errors import HasFraction, UnsupportedBase
from .numeral import Numeral


def _int_digits(n: int, b: int) -> dict[int, int]:
    # b may be negative; remainders are kept in [0, |b|)
    digits = {}
    exp = 0
    while n:
        n, d = divmod(n, b)
        if d < 0:
            # Python's divmod gives the remainder the divisor's sign
            n += 1
            d -= b
        if d:
            digits[exp] = d
        exp += 1
    return digits


def int_to_base(n: int, base: BaseSpec) -> Numeral:
    """Digits of integer ``n`` in an integer base.

    Positive bases use sign and magnitude; negative bases need no sign.
    """
    if base.family not in (Family.POS_INT, Family.NEG_INT):
        raise UnsupportedBase(f"int_to_base needs an integer base, got {base}")
    b = int(base.value)
    negative = n < 0 and b > 0
    digits = _int_digits(-n if negative else n, b)
    return Numeral.from_digits(base, digits, negative=negative)


def base_to_int(n: Numeral) -> int:
    if n.base.family not in (Family.POS_INT, Family.NEG_INT):
        raise UnsupportedBase(f"base_to_int needs an integer base, got {n.base}")
    if n.digits and n.low < 0:
        raise HasFraction("numeral has fractional digits")
    b = int(n.base.value)
    total = sum(d * b ** e for e, d in n.digits)
    return -total if n.negative else total
