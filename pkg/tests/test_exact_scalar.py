from fractions import Fraction

import mpmath
import pytest

from spinfermion.core.errors import DivisionByZero, ParseError
from spinfermion.core.exact_scalar import (
    ONE,
    ZERO,
    ExactComplex,
    ExactReal,
    add,
    format_decimal,
    format_exact_complex,
    format_exact_real,
    invert,
    mul,
    normalize_radical,
    parse_exact_complex,
    parse_exact_real,
    to_float,
)

R = ExactReal.rational
sqrt = ExactReal.sqrt
q = parse_exact_real


@pytest.mark.parametrize("n, expected", [(12, (2, 3)), (1, (1, 1)), (360, (6, 10)), (49, (7, 1))])
def test_normalize_radical(n, expected):
    assert normalize_radical(n) == expected


def test_normalize_radical_rejects_zero():
    with pytest.raises(ValueError):
        normalize_radical(0)


def test_add_examples():
    assert add(q("3/8+1/12*sqrt(3)"), R(Fraction(-3, 8))) == q("1/12*sqrt(3)")
    assert dict(add(sqrt(7), sqrt(15)).items()) == {7: Fraction(1), 15: Fraction(1)}
    x = q("2-sqrt(5)")
    assert add(ZERO, x) == x


def test_mul_examples():
    assert mul(sqrt(3), sqrt(3)) == 3
    assert mul(sqrt(6), sqrt(10)) == 2 * sqrt(15)
    # (2 + 3 sqrt3) / (8 sqrt3) rationalized
    assert mul(2 + 3 * sqrt(3), R(Fraction(1, 24)) * sqrt(3)) == q("3/8+1/12*sqrt(3)")


def test_invert_examples():
    assert invert(sqrt(3)) == R(Fraction(1, 3)) * sqrt(3)
    assert invert(R(2)) == R(Fraction(1, 2))
    assert invert(1 + sqrt(2)) == -1 + sqrt(2)


def test_invert_several_primes():
    a = q("1+sqrt(2)+sqrt(3)-2*sqrt(6)+3/7*sqrt(35)")
    assert a * invert(a) == ONE


def test_invert_zero():
    with pytest.raises(DivisionByZero):
        invert(ZERO)
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_to_float_and_decimal():
    assert format_decimal(sqrt(3), 6) == "1.732051"
    assert to_float(ZERO, 6) == 0
    assert format_decimal(q("3/8+1/12*sqrt(3)"), 6) == "0.519338"
    assert format_decimal(-sqrt(2), 3) == "-1.414"
    with mpmath.workdps(50):
        assert abs(to_float(sqrt(3), 30) - mpmath.sqrt(3)) < mpmath.mpf(10) ** -30


def _random_element(rng):
    radicands = rng.sample([1, 2, 3, 5, 6, 7, 10, 15], rng.randint(1, 4))
    return ExactReal({d: Fraction(rng.randint(-9, 9), rng.randint(1, 7)) for d in radicands})


def test_field_axioms_on_random_elements(rng):
    for _ in range(40):
        a, b, c = (_random_element(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        if a:
            assert a * invert(a) == 1


def test_canonicalization():
    assert ExactReal({12: 1, 3: 2}) == 4 * sqrt(3)
    assert ExactReal({4: 1}) == 2
    assert ExactReal({5: 1, 20: Fraction(-1, 2)}).is_zero()
    x = q("1/2-3*sqrt(6)+sqrt(10)")
    assert ExactReal(dict(x.items())) == x


def test_products_of_square_roots_square_back():
    squarefree = [n for n in range(1, 101) if normalize_radical(n)[0] == 1]
    for a in squarefree:
        for b in squarefree:
            if b < a:
                continue
            product = mul(sqrt(a), sqrt(b))
            assert product * product == a * b


def test_sqrt_of_rationals():
    assert sqrt(Fraction(1, 3)) == R(Fraction(1, 3)) * sqrt(3)
    assert sqrt(9) == 3
    assert sqrt(0) == ZERO
    with pytest.raises(ValueError):
        sqrt(-2)


@pytest.mark.parametrize(
    "text",
    ["3/8+1/12*sqrt(3)", "2*sqrt(3)", "-sqrt(7)", "sqrt(7)+sqrt(15)", "0", "-1/252", "1/2-3*sqrt(6)"],
)
def test_format_is_canonical(text):
    assert format_exact_real(parse_exact_real(text)) == text


def test_parse_accepts_loose_forms():
    assert q("sqrt(12)") == 2 * sqrt(3)
    assert q("3/8 + 1/12 * sqrt(3)") == q("3/8+1/12*sqrt(3)")
    assert q("1/1*sqrt(7)") == sqrt(7)
    assert q("-2/4") == R(Fraction(-1, 2))


@pytest.mark.parametrize("text", ["", "3*", "abc", "2sqrt(3)", "1/2-", "sqrt(0)", "3--2", "1/0", "-2/0*sqrt(3)"])
def test_parse_rejects_malformed(text):
    with pytest.raises(ParseError):
        parse_exact_real(text)


def test_complex_arithmetic_and_text():
    z = ExactComplex(1, sqrt(3))
    assert z * z.conjugate() == 4
    assert z * z.inverse() == 1
    assert format_exact_complex(ExactComplex(Fraction(1, 2), -sqrt(3))) == "(1/2, -sqrt(3))"
    assert parse_exact_complex("(1/2, -sqrt(3))") == ExactComplex(Fraction(1, 2), -sqrt(3))
    assert parse_exact_complex("5") == ExactComplex(5)


def test_inspection():
    x = q("3/8+1/12*sqrt(3)")
    assert x.radicands() == (1, 3)
    assert x.coefficient(3) == Fraction(1, 12)
    assert x.coefficient(5) == 0
    assert x.rational_part() == Fraction(3, 8)
    assert q("-7/2").as_fraction() == Fraction(-7, 2)
    with pytest.raises(ValueError):
        x.as_fraction()
