import random

import pytest
from hypothesis import given, strategies as st

from conftest import numerals, sympy_value
from imagbase import (
    ExactComplex,
    Numeral,
    add,
    conjugate,
    div,
    div_inline,
    eval_numeral,
    format_numeral,
    long_divide_neg,
    mul,
    negate,
    normalize,
    parse_base,
    parse_numeral,
    sub,
)
from imagbase.errors import BaseMismatch, DivisorZero, NonIntegerCoefficient, UnsupportedBase

B3, B4 = parse_base("3i"), parse_base("4i")
NEG10 = parse_base("-10")
ARITH_BASES = [parse_base(b) for b in ("2i", "3i", "4i", "6i", "-3i")]


def num(text, base=B3):
    return parse_numeral(text, base)


def fmt(n):
    return format_numeral(n)


@pytest.mark.parametrize(
    "op, a, b, expected, base",
    [
        (add, "41", "61", "108012", B3),
        (add, "132", "11873", "15", B3),
        (add, "0.08", "0.01", "108", B3),
        (add, "123.485", "300.034", "422.32", B3),
        (sub, "871", "233", "747", B3),
        (sub, "204.000", "1.104", "203.005", B3),
        (sub, "25763.0", "126742.3", "8031.6", B3),
        (sub, "468.782", "551.123", "10817.768", B3),
        (mul, "5", "2", "10801", B3),
        (mul, "5.0", "0.3", "1080.6", B3),
        (mul, "10432.567", "87.200", "523204.0875", B3),
        (mul, "18.68", "26.00", "11FF39.4", B4),
    ],
)
def test_worked_examples(op, a, b, expected, base):
    assert fmt(op(num(a, base), num(b, base))) == expected


def test_normalize_column_sums():
    # 41 + 61 column by column: 10 at exponent 0, 10... in base 3i
    assert fmt(normalize({1: 10, 0: 2}, B3)) == "108012"
    assert fmt(normalize({-2: 9}, B3)) == "108"
    canonical = num("10803.3")
    assert normalize(canonical.as_dict(), B3) == canonical


@given(st.sampled_from(ARITH_BASES).flatmap(
    lambda b: st.tuples(st.just(b), st.dictionaries(st.integers(-6, 8), st.integers(-2 * b.digit_count,
                                                                                  2 * b.digit_count)))))
def test_normalize_preserves_value(args):
    base, t = args
    raw = sum((ExactComplex(0, base.value) ** e * d for e, d in t.items()), ExactComplex())
    assert eval_numeral(normalize(t, base)) == raw


def pairs(base):
    return st.tuples(numerals(base), numerals(base))


@given(st.sampled_from(ARITH_BASES).flatmap(pairs))
def test_homomorphism(ab):
    a, b = ab
    va, vb = sympy_value(a), sympy_value(b)
    assert eval_numeral(add(a, b)) == va + vb
    assert eval_numeral(sub(a, b)) == va - vb
    assert eval_numeral(mul(a, b)) == va * vb
    assert eval_numeral(negate(a)) == -va


@given(st.sampled_from(ARITH_BASES).flatmap(lambda b: st.tuples(numerals(b), numerals(b), numerals(b))))
def test_commutative_associative(abc):
    a, b, c = abc
    assert add(a, b) == add(b, a)
    assert mul(a, b) == mul(b, a)
    assert add(add(a, b), c) == add(a, add(b, c))
    assert mul(mul(a, b), c) == mul(a, mul(b, c))
    assert sub(a, a).is_zero
    assert mul(a, num("1", a.base)) == a


@given(st.sampled_from([parse_base("-2"), parse_base("-4"), NEG10]).flatmap(pairs))
def test_negative_integer_base_arithmetic(ab):
    a, b = ab
    assert eval_numeral(add(a, b)) == eval_numeral(a) + eval_numeral(b)
    assert eval_numeral(mul(a, b)) == eval_numeral(a) * eval_numeral(b)


def test_errors():
    with pytest.raises(BaseMismatch):
        add(num("1"), num("1", B4))
    with pytest.raises(NonIntegerCoefficient):
        add(num("1", parse_base("5.75i")), num("1", parse_base("5.75i")))
    with pytest.raises(UnsupportedBase):
        mul(num("1", parse_base("10")), num("1", parse_base("10")))
    with pytest.raises(DivisorZero):
        div(num("1"), Numeral.zero(B3))
    with pytest.raises(DivisorZero):
        long_divide_neg(num("1", NEG10), Numeral.zero(NEG10))


def test_conjugate():
    assert fmt(conjugate(num("10E6", B4))) == "26"
    assert fmt(conjugate(num("26", B4))) == "10E6"
    assert fmt(mul(num("10E6", B4), num("26", B4))) == "10A04"
    real = num("10803")
    assert conjugate(real) == real


@given(st.sampled_from(ARITH_BASES).flatmap(numerals))
def test_conjugate_is_semantic(n):
    assert eval_numeral(conjugate(n)) == sympy_value(n).conjugate()


def test_negadecimal_division():
    res = long_divide_neg(num("14117", NEG10), num("28", NEG10), 4)
    assert fmt(res.quotient) == "1512.1247"
    assert fmt(res.partial_remainder) == "4"
    assert not res.exact
    res = long_divide_neg(num("197349", NEG10), num("9", NEG10))
    assert fmt(res.quotient) == "2261"
    assert res.exact
    assert res.remainder.is_zero


def test_long_division_identity_and_rule3():
    rng = random.Random(3)
    for _ in range(500):
        B = rng.choice([2, 3, 4, 10])
        base = parse_base(str(-B))
        a = Numeral.from_digits(base, {e: rng.randrange(B) for e in range(-2, 6)})
        d = Numeral.from_digits(base, {e: rng.randrange(B) for e in range(-1, 3)})
        if d.is_zero:
            continue
        res = long_divide_neg(a, d, 6)
        assert eval_numeral(res.quotient) * eval_numeral(d) + eval_numeral(res.remainder) == eval_numeral(a)
        assert res.exact == res.remainder.is_zero
        # steps are recorded against the divisor shifted to an integer
        D = eval_numeral(d.shift(max(0, -d.low))).re
        for _, _, _, r in res.steps:
            assert r == 0 or ((r > 0) != (D > 0) and abs(r) < abs(D))


@pytest.mark.parametrize("method", [div, div_inline])
def test_imaginary_divisions(method):
    assert fmt(method(num("18.68", B4), num("10E6", B4)).quotient) == "11.DC"
    assert fmt(method(num("11FF39.4", B4), num("10A04", B4)).quotient) == "11.DC"
    assert fmt(method(num("11EE15FEC.168", B4), num("E94", B4)).quotient) == "32A.F12"


@pytest.mark.parametrize("method", [div, div_inline])
@pytest.mark.parametrize("base", ARITH_BASES)
def test_divide_by_one(method, base):
    x = Numeral.from_digits(base, {3: 1, 0: 2, -2: 1})
    res = method(x, num("1", base))
    assert res.quotient == x and res.exact
    assert long_divide_neg(num("1512", NEG10), num("1", NEG10)).quotient == num("1512", NEG10)


@pytest.mark.parametrize("method", [div, div_inline])
def test_division_identity(method):
    rng = random.Random(5)
    for _ in range(150):
        base = rng.choice(ARITH_BASES[:4])
        m = base.digit_count
        a = Numeral.from_digits(base, {e: rng.randrange(m) for e in range(-1, 5)})
        d = Numeral.from_digits(base, {e: rng.randrange(m) for e in range(0, 3)})
        if d.is_zero:
            continue
        res = method(a, d, 8)
        assert add(mul(res.quotient, d), res.remainder) == a
        assert res.exact == res.remainder.is_zero


def test_purely_imaginary_divisor():
    rng = random.Random(11)
    for _ in range(100):
        base = rng.choice(ARITH_BASES)
        q = Numeral.from_digits(base, {e: rng.randrange(base.digit_count) for e in range(-2, 4)})
        d = Numeral.from_digits(base, {1: rng.randrange(1, base.digit_count)})
        res = div(mul(q, d), d)
        assert res.exact
        assert res.quotient == q


def test_div_and_inline_agree_on_exact_pairs():
    rng = random.Random(13)
    for _ in range(1000):
        base = rng.choice(ARITH_BASES[:4])
        m = base.digit_count
        q = Numeral.from_digits(base, {e: rng.randrange(m) for e in range(-2, 4)})
        d = Numeral.from_digits(base, {e: rng.randrange(m) for e in range(0, 3)})
        if d.is_zero:
            continue
        a = mul(q, d)
        r1, r2 = div(a, d), div_inline(a, d)
        assert r1.quotient == r2.quotient == q
        assert r1.exact and r2.exact
