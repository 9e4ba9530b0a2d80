"""Purely imaginary bases ``n*i`` with ``|n| > 1``.

Since ``(n i)^2 = -n^2``, the even positions of a base-``ni`` numeral form a
numeral in the negative base ``-n^2`` holding the real part, and the odd
positions form one holding the imaginary part divided by ``n``.  Conversion
expands both parts in ``-n^2`` and interleaves them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

import mpmath

from .bases import BaseSpec, Family, effective_base
from .beta import ExpansionResult, beta_expand_neg
from .complexnum import ExactComplex
from .errors import BaseMismatch, NonIntegerCoefficient, UnsupportedBase
from .integer import int_to_base
from .numeral import Numeral, eval_numeral
from .reals import DEFAULT_CONTEXT, PrecisionContext, Real, is_exact, sign, to_mpf


class ComplexInput(NamedTuple):
    q: Real
    r: Real


@dataclass(frozen=True)
class PartSplit:
    real_part: Numeral
    imag_part: Numeral


def _require_imaginary(base: BaseSpec):
    if base.family is not Family.IMAGINARY:
        raise UnsupportedBase(f"{base} is not an imaginary base")


def _as_input(a) -> ComplexInput:
    if isinstance(a, ComplexInput):
        return a
    if isinstance(a, ExactComplex):
        return ComplexInput(a.re, a.im)
    if isinstance(a, tuple):
        return ComplexInput(*a)
    return ComplexInput(Fraction(a), Fraction(0))


def _expand_part(x: Real, eb: BaseSpec, max_frac: int, ctx: PrecisionContext) -> ExpansionResult:
    if isinstance(x, int) or (isinstance(x, Fraction) and x.denominator == 1):
        if eb.family is Family.NEG_INT:
            return ExpansionResult(int_to_base(int(x), eb), True, 0)
    return beta_expand_neg(x, eb, PrecisionContext(ctx.precision_bits, max(max_frac, 1)))


def expand_complex(a, base: BaseSpec, ctx: PrecisionContext = DEFAULT_CONTEXT) -> ExpansionResult:
    """Like :func:`complex_to_imaginary` but also reports termination.

    ``terminated`` is true when both part expansions ended in an exact zero
    and nothing was cut at ``ctx.max_frac_digits``.
    """
    _require_imaginary(base)
    q, r = _as_input(a)
    n = base.value
    eb = effective_base(base)
    if is_exact(r) and is_exact(n):
        r_scaled = Fraction(r) / n
    else:
        with mpmath.workprec(ctx.precision_bits):
            r_scaled = to_mpf(r, ctx.precision_bits) / to_mpf(n, ctx.precision_bits)

    m = ctx.max_frac_digits
    # exponent e of the -n^2 expansion lands at 2e (real) or 2e+1 (imaginary)
    real_res = _expand_part(q, eb, m // 2, ctx)
    imag_res = _expand_part(r_scaled, eb, (m + 1) // 2, ctx)
    digits = {}
    for e, d in real_res.numeral.digits:
        digits[2 * e] = d
    for e, d in imag_res.numeral.digits:
        digits[2 * e + 1] = d
    numeral = Numeral.from_digits(base, digits)
    truncated = numeral.truncate(m)
    terminated = real_res.terminated and imag_res.terminated and truncated == numeral
    return ExpansionResult(truncated, terminated, max(real_res.prescale_p, imag_res.prescale_p))


def complex_to_imaginary(a, base: BaseSpec, ctx: PrecisionContext = DEFAULT_CONTEXT) -> Numeral:
    """Digits of ``a = q + r i`` in the imaginary base ``base``.

    ``a`` is a :class:`ComplexInput`, an :class:`ExactComplex`, a ``(q, r)``
    pair or a real number.  Parts may be exact rationals, mpf values or
    :class:`~imagbase.reals.Irrational` constants.
    """
    return expand_complex(a, base, ctx).numeral


def imaginary_to_complex(n: Numeral, ctx: PrecisionContext = DEFAULT_CONTEXT) -> ExactComplex:
    _require_imaginary(n.base)
    return eval_numeral(n, ctx)


def split_parts(n: Numeral) -> PartSplit:
    _require_imaginary(n.base)
    even = [(e, d) for e, d in n.digits if e % 2 == 0]
    odd = [(e, d) for e, d in n.digits if e % 2 != 0]
    return PartSplit(Numeral(n.base, tuple(even)), Numeral(n.base, tuple(odd)))


def compress_part(part: Numeral, parity: int) -> Numeral:
    """Drop the other lattice: digit at ``2e + parity`` goes to exponent ``e`` in base -n^2."""
    eb = effective_base(part.base)
    return Numeral.from_digits(eb, {(e - parity) // 2: d for e, d in part.digits if e % 2 == parity})


def expand_part(n: Numeral, base: BaseSpec, parity: int) -> Numeral:
    """Inverse of :func:`compress_part`."""
    return Numeral.from_digits(base, {2 * e + parity: d for e, d in n.digits})


def compare_parts(a: Numeral, b: Numeral, which: str = "real") -> int:
    """Compare real (or imaginary) parts digit by digit; returns -1, 0 or 1.

    Real parts compare directly at exponents 4k and oppositely at 4k+2.
    Imaginary parts compare directly at 4k+1 and oppositely at 4k+3 when the
    coefficient is positive; a negative coefficient swaps those two.
    """
    if a.base != b.base:
        raise BaseMismatch(f"cannot compare base {a.base} with base {b.base}")
    _require_imaginary(a.base)
    if which not in ("real", "imag"):
        raise ValueError("which must be 'real' or 'imag'")
    parity = 0 if which == "real" else 1
    da = {e: d for e, d in a.digits if e % 2 == parity}
    db = {e: d for e, d in b.digits if e % 2 == parity}
    differing = [e for e in da.keys() | db.keys() if da.get(e, 0) != db.get(e, 0)]
    if not differing:
        return 0
    top = max(differing)
    direct = top % 4 == parity
    if parity == 1 and sign(a.base.value) < 0:
        direct = not direct
    diff = da.get(top, 0) - db.get(top, 0)
    result = 1 if diff > 0 else -1
    return result if direct else -result


def _integer_coefficient(base: BaseSpec) -> int:
    _require_imaginary(base)
    if not base.is_integer_imaginary:
        raise NonIntegerCoefficient(f"unity patterns need an integer coefficient, got {base}")
    return int(base.value)


def _pattern(base: BaseSpec, digits: dict[int, int], expected: ExactComplex) -> Numeral:
    n = Numeral.from_digits(base, digits)
    assert eval_numeral(n) == expected, (n, expected)
    return n


def unity_one(base: BaseSpec) -> Numeral:
    return _pattern(base, {0: 1}, ExactComplex(1))


def unity_minus_one(base: BaseSpec) -> Numeral:
    n = _integer_coefficient(base)
    return _pattern(base, {2: 1, 0: n * n - 1}, ExactComplex(-1))


def _i_pattern(n: int, positive_rule: bool) -> dict[int, int]:
    if positive_rule:
        return {1: 1, -1: n * n - abs(n)}
    return {-1: abs(n)}


def unity_i(base: BaseSpec) -> Numeral:
    n = _integer_coefficient(base)
    return _pattern(base, _i_pattern(n, n > 0), ExactComplex(0, 1))


def unity_minus_i(base: BaseSpec) -> Numeral:
    n = _integer_coefficient(base)
    return _pattern(base, _i_pattern(n, n < 0), ExactComplex(0, -1))


UNITIES = {
    "1": unity_one,
    "-1": unity_minus_one,
    "i": unity_i,
    "-i": unity_minus_i,
}
