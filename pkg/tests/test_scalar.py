from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricfol.scalar import (DiscriminantError, QuadScalar, common_discriminant, format_scalar,
                             parse_scalar, quad, rational_parts, scalar_sign, scalar_to_json,
                             sqrt_of, to_scalar)

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=30)
discriminants = st.sampled_from([2, 3, 5, 6, 7, 10])


def real_value(x, dps=60):
    mpmath.mp.dps = dps
    if isinstance(x, QuadScalar):
        return mpmath.mpf(x.p.numerator) / x.p.denominator + \
            mpmath.mpf(x.q.numerator) / x.q.denominator * mpmath.sqrt(x.d)
    return mpmath.mpf(x.numerator) / x.denominator


def test_quad_collapses_to_fraction():
    assert quad(3, 0, 2) == Fraction(3)
    assert isinstance(quad(3, 0, 2), Fraction)
    assert isinstance(sqrt_of(4), Fraction) and sqrt_of(4) == 2


def test_sqrt2_squared_is_two():
    r = sqrt_of(2)
    assert r * r == 2
    assert (1 + r) * (1 - r) == -1


def test_inverse_and_division():
    x = quad(Fraction(1, 2), 3, 5)
    assert x * x.inverse() == 1
    assert (x / x) == 1


def test_mixed_discriminants_raise():
    with pytest.raises(DiscriminantError):
        sqrt_of(2) + sqrt_of(3)
    with pytest.raises(DiscriminantError):
        common_discriminant([sqrt_of(2), Fraction(1), sqrt_of(3)])
    assert common_discriminant([Fraction(1), sqrt_of(7)]) == 7
    assert common_discriminant([Fraction(1)]) is None


def test_floats_rejected():
    with pytest.raises(TypeError):
        to_scalar(0.5)


@pytest.mark.parametrize("text,value", [
    ("3", Fraction(3)),
    ("-2/6", Fraction(-1, 3)),
    ("sqrt(2)", quad(0, 1, 2)),
    ("-sqrt(2)", quad(0, -1, 2)),
    ("1-sqrt(2)", quad(1, -1, 2)),
    ("1/2+3/4*sqrt(5)", quad(Fraction(1, 2), Fraction(3, 4), 5)),
    ("1/10*sqrt(2)", quad(0, Fraction(1, 10), 2)),
    ("2-3*sqrt(4)", Fraction(-4)),
])
def test_parse_literals(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("text", ["", "1.5", "sqrt(8)", "1 sqrt(2)", "1*sqrt(2)+1", "abc"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_scalar(text)


@given(fractions, fractions, discriminants)
def test_format_parse_round_trip(p, q, d):
    x = quad(p, q, d)
    assert parse_scalar(format_scalar(x)) == x


def test_scalar_to_json():
    assert scalar_to_json(Fraction(4)) == 4
    assert scalar_to_json(Fraction(1, 2)) == "1/2"
    assert scalar_to_json(quad(1, -1, 2)) == "1-sqrt(2)"


@settings(max_examples=300)
@given(fractions, fractions, discriminants)
def test_sign_matches_high_precision(p, q, d):
    x = quad(p, q, d)
    v = real_value(x)
    expected = (v > 0) - (v < 0)
    assert scalar_sign(x) == expected


@given(fractions, fractions, fractions, fractions, discriminants)
def test_field_operations_match_reals(a, b, c, e, d):
    x, y = quad(a, b, d), quad(c, e, d)
    for got, want in [(x + y, real_value(x) + real_value(y)),
                      (x - y, real_value(x) - real_value(y)),
                      (x * y, real_value(x) * real_value(y))]:
        assert abs(real_value(got) - want) < mpmath.mpf(10) ** -40
    if y != 0:
        assert abs(real_value(x / y) - real_value(x) / real_value(y)) < mpmath.mpf(10) ** -35


@given(fractions, fractions, discriminants)
def test_rational_parts(p, q, d):
    assert rational_parts(quad(p, q, d)) == (p, q)


def test_ordering_near_zero():
    # 99/70 is a convergent of sqrt(2) from above; the difference is about 7e-5
    x = sqrt_of(2) - Fraction(99, 70)
    assert scalar_sign(x) == -1
    assert sqrt_of(2) > Fraction(99, 70) - Fraction(1, 10000)
    assert sorted([sqrt_of(2), Fraction(3, 2), Fraction(7, 5)]) == \
        [Fraction(7, 5), sqrt_of(2), Fraction(3, 2)]
