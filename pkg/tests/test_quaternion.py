from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from app.core import ParseError, ZeroInverse
from app.models.quaternion import (
    I,
    J,
    K,
    ONE,
    ZERO,
    Quaternion,
    format_quaternion,
    parse_quaternion,
    qconj,
    qinv,
    qmul,
)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
quaternions = st.builds(Quaternion, rationals, rationals, rationals, rationals)
nonzero = quaternions.filter(lambda q: not q.is_zero())


def test_unit_products():
    assert qmul(I, J) == K
    assert qmul(J, I) == -K
    assert qmul(J, K) == I
    assert qmul(K, I) == J
    for unit in (I, J, K):
        assert qmul(unit, unit) == -ONE


@given(quaternions, quaternions, quaternions)
def test_multiplication_is_associative(a, b, c):
    assert qmul(qmul(a, b), c) == qmul(a, qmul(b, c))


@given(quaternions, quaternions, quaternions)
def test_multiplication_distributes(a, b, c):
    assert qmul(a, b + c) == qmul(a, b) + qmul(a, c)
    assert qmul(a + b, c) == qmul(a, c) + qmul(b, c)


@given(quaternions, quaternions)
def test_norm_is_multiplicative(a, b):
    assert qmul(a, b).norm2() == a.norm2() * b.norm2()


@given(quaternions, quaternions)
def test_conjugate_reverses_products(a, b):
    assert qconj(qmul(a, b)) == qmul(qconj(b), qconj(a))


@given(nonzero)
def test_inverse_is_two_sided(a):
    assert qmul(a, qinv(a)) == ONE
    assert qmul(qinv(a), a) == ONE


def test_zero_has_no_inverse():
    with pytest.raises(ZeroInverse):
        qinv(ZERO)


@given(quaternions)
def test_format_then_parse_is_identity(a):
    assert parse_quaternion(format_quaternion(a)) == a


@pytest.mark.parametrize(
    "text, expected",
    [
        ("0", ZERO),
        ("1", ONE),
        ("-k", -K),
        ("1/2+3*i-4/5*j+k", Quaternion(Fraction(1, 2), 3, Fraction(-4, 5), 1)),
        (" 2 * i + i ", Quaternion(0, 3)),
        ("-2/4", Quaternion(Fraction(-1, 2))),
    ],
)
def test_parse(text, expected):
    assert parse_quaternion(text) == expected


@pytest.mark.parametrize(
    "q, text",
    [
        (ZERO, "0"),
        (Quaternion(0, 1), "i"),
        (Quaternion(0, 0, -1), "-j"),
        (Quaternion(Fraction(1, 2), 0, 0, Fraction(-3, 2)), "1/2-3/2*k"),
        (Quaternion(-1, 2, 0, 1), "-1+2*i+k"),
    ],
)
def test_format_is_canonical(q, text):
    assert format_quaternion(q) == text


@pytest.mark.parametrize(
    "text, offset",
    [
        ("", 0),
        ("1/0", 2),
        ("1 i", 2),
        ("2*x", 1),
    ],
)
def test_parse_errors_carry_offset(text, offset):
    with pytest.raises(ParseError) as exc:
        parse_quaternion(text)
    assert exc.value.offset == offset
