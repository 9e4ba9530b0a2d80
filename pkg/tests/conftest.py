import sys
from fractions import Fraction
from pathlib import Path

import sympy
from hypothesis import settings, strategies as st

from imagbase import BaseSpec, ExactComplex, Numeral, parse_base

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("default", deadline=None, max_examples=200)
settings.load_profile("default")


def sympy_value(numeral: Numeral) -> ExactComplex:
    """Positional value computed by sympy, independent of eval_numeral."""
    base = numeral.base
    if base.family.name == "IMAGINARY":
        b = sympy.Rational(base.value.numerator, base.value.denominator) * sympy.I
    else:
        b = sympy.Rational(base.value.numerator, base.value.denominator)
    total = sympy.Integer(0)
    for e, d in numeral.digits:
        total += d * b ** e
    if numeral.negative:
        total = -total
    re, im = sympy.expand(total).as_real_imag()
    return ExactComplex(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))


def numerals(base: BaseSpec, min_exp=-6, max_exp=8, max_size=10):
    """Canonical numerals of ``base`` with a few nonzero digits."""
    return st.dictionaries(
        st.integers(min_exp, max_exp),
        st.integers(1, base.digit_count - 1),
        max_size=max_size,
    ).map(lambda d: Numeral.from_digits(base, d))


rationals = st.builds(Fraction, st.integers(-10**6, 10**6), st.integers(1, 10**3))
gaussian_rationals = st.builds(ExactComplex, rationals, rationals)

INTEGER_IMAGINARY = [parse_base(b) for b in ("2i", "-2i", "3i", "-3i", "4i", "-4i", "6i", "-6i")]


def horner_value(numeral: Numeral) -> ExactComplex:
    """Positional value by Horner's rule over Gaussian integers.

    Faster than :func:`sympy_value` and shares no code with eval_numeral;
    only for integer-coefficient imaginary bases and negative integer bases.
    """
    base = numeral.base
    if not numeral.digits:
        return ExactComplex()
    imaginary = base.family.name == "IMAGINARY"
    b = (0, int(base.value)) if imaginary else (int(base.value), 0)
    low = numeral.low
    re, im = 0, 0
    table = dict(numeral.digits)
    for e in range(numeral.high, low - 1, -1):
        re, im = re * b[0] - im * b[1], re * b[1] + im * b[0]
        re += table.get(e, 0)
    # times base**low: (n i)^k = n^k i^k
    k = int(base.value)
    scale = Fraction(k) ** low if low < 0 else Fraction(k ** low)
    if imaginary:
        for _ in range(low % 4):
            re, im = -im, re
    value = ExactComplex(re * scale, im * scale)
    return -value if numeral.negative else value


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
