from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import INTEGER_IMAGINARY, gaussian_rationals, numerals, sympy_value
from imagbase import (
    ExactComplex,
    PrecisionContext,
    complex_to_imaginary,
    eval_numeral,
    expand_complex,
    format_numeral,
    imaginary_to_complex,
    parse_base,
    parse_numeral,
    split_parts,
    compare_parts,
    unity_i,
    unity_minus_i,
    unity_minus_one,
    unity_one,
)
from imagbase.errors import BaseMismatch, NonIntegerCoefficient

B3 = parse_base("3i")


@pytest.mark.parametrize(
    "value, base, text",
    [
        (ExactComplex(-5, 7), "2i", "103203.2"),
        (ExactComplex(0), "2i", "0"),
        (ExactComplex(85, 47), "6i", "10Y8D.6"),
        (ExactComplex(85, -47), "6i", "11YTD.U"),
        (ExactComplex(85, 47), "-6i", "11YTD.U"),
        (ExactComplex(85, -47), "-6i", "10Y8D.6"),
        (ExactComplex(0, 1), "2i", "10.2"),
        (ExactComplex(-1), "3i", "108"),
    ],
)
def test_conversion_examples(value, base, text):
    assert format_numeral(complex_to_imaginary(value, parse_base(base))) == text


@pytest.mark.parametrize(
    "text, base, value",
    [("103203.2", "2i", ExactComplex(-5, 7)), ("1", "5i", ExactComplex(1)), ("10.2", "2i", ExactComplex(0, 1))],
)
def test_back(text, base, value):
    assert imaginary_to_complex(parse_numeral(text, parse_base(base))) == value


def test_accepts_tuples_and_numbers():
    base = parse_base("2i")
    assert complex_to_imaginary((-5, 7), base) == complex_to_imaginary(ExactComplex(-5, 7), base)
    assert format_numeral(complex_to_imaginary(5, base)) == "10301"


@given(st.sampled_from(INTEGER_IMAGINARY), gaussian_rationals)
def test_round_trip_or_error_bound(base, z):
    ctx = PrecisionContext(max_frac_digits=20)
    res = expand_complex(z, base, ctx)
    back = imaginary_to_complex(res.numeral)
    if res.terminated:
        assert back == z
    else:
        # each part is an eB expansion cut after max_frac // 2 digits
        bound = Fraction(base.value ** 2) ** -(ctx.max_frac_digits // 2)
        assert abs(back.re - z.re) <= bound
        assert abs(back.im - z.im) <= abs(base.value) * bound


@given(st.sampled_from(INTEGER_IMAGINARY), gaussian_rationals)
def test_conjugate_duality(base, z):
    flipped = parse_base(str(-base.value) + "i")
    assert format_numeral(complex_to_imaginary(z, base)) == format_numeral(
        complex_to_imaginary(z.conjugate(), flipped))


@pytest.mark.parametrize(
    "text, real, imag",
    [("11873.3", "10803", "1070.3"), ("10880.3", "10800", "80.3"), ("0", "0", "0")],
)
def test_split_examples(text, real, imag):
    parts = split_parts(parse_numeral(text, B3))
    assert format_numeral(parts.real_part) == real
    assert format_numeral(parts.imag_part) == imag


@given(st.sampled_from(INTEGER_IMAGINARY).flatmap(numerals))
def test_split_is_partition(n):
    parts = split_parts(n)
    re_d, im_d = parts.real_part.as_dict(), parts.imag_part.as_dict()
    assert not set(re_d) & set(im_d)
    assert {**re_d, **im_d} == n.as_dict()
    assert eval_numeral(parts.real_part).im == 0
    assert eval_numeral(parts.imag_part).re == 0
    assert eval_numeral(parts.real_part) + eval_numeral(parts.imag_part) == eval_numeral(n)


def test_compare_examples():
    a = parse_numeral("11873.3", B3)
    b = parse_numeral("10880.3", B3)
    assert compare_parts(a, b, "real") == 1
    assert compare_parts(a, b, "imag") == -1
    assert compare_parts(a, a, "real") == 0
    assert compare_parts(a, a, "imag") == 0


def test_compare_base_mismatch():
    with pytest.raises(BaseMismatch):
        compare_parts(parse_numeral("1", B3), parse_numeral("1", parse_base("2i")))


def _cmp(x, y):
    return (x > y) - (x < y)


@given(st.sampled_from(INTEGER_IMAGINARY).flatmap(
    lambda b: st.tuples(numerals(b), numerals(b), st.sampled_from(["real", "imag"]))))
def test_compare_matches_oracle(args):
    a, b, which = args
    va, vb = sympy_value(a), sympy_value(b)
    attr = "re" if which == "real" else "im"
    assert compare_parts(a, b, which) == _cmp(getattr(va, attr), getattr(vb, attr))


@pytest.mark.parametrize(
    "fn, base, text",
    [
        (unity_minus_one, "3i", "108"),
        (unity_i, "2i", "10.2"),
        (unity_i, "4i", "10.C"),
        (unity_i, "-9i", "0.9"),
        (unity_one, "7i", "1"),
        (unity_minus_i, "9i", "0.9"),
    ],
)
def test_unity_examples(fn, base, text):
    assert format_numeral(fn(parse_base(base))) == text


@pytest.mark.parametrize("n", [k for k in range(-12, 13) if abs(k) > 1])
def test_unities_evaluate(n):
    base = parse_base(f"{n}i")
    assert eval_numeral(unity_one(base)) == 1
    assert eval_numeral(unity_minus_one(base)) == -1
    assert eval_numeral(unity_i(base)) == ExactComplex(0, 1)
    assert eval_numeral(unity_minus_i(base)) == ExactComplex(0, -1)


def test_nine_readings():
    # "0.9" is i in base -9i and -i in base 9i
    assert eval_numeral(parse_numeral("0.9", parse_base("-9i"))) == ExactComplex(0, 1)
    assert eval_numeral(parse_numeral("0.9", parse_base("9i"))) == ExactComplex(0, -1)


def test_unity_needs_integer_coefficient():
    with pytest.raises(NonIntegerCoefficient):
        unity_i(parse_base("5.75i"))
