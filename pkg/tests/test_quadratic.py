from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from pascal_pyramid.quadratic import QuadraticNumber, squarefree_split

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=20)
DISCS = [2, 5, 8, 12, 17]


def qn(r, s, d=8):
    return QuadraticNumber(Fraction(r), Fraction(s), d)


@st.composite
def elements(draw, disc=None):
    d = disc if disc is not None else draw(st.sampled_from(DISCS))
    return QuadraticNumber(draw(fractions), draw(fractions), d)


def test_squarefree_split():
    assert squarefree_split(8) == (2, 2)
    assert squarefree_split(12) == (2, 3)
    assert squarefree_split(17) == (1, 17)


def test_rejects_square_discriminant():
    with pytest.raises(ValueError):
        QuadraticNumber(Fraction(1), Fraction(1), 9)
    with pytest.raises(ValueError):
        QuadraticNumber(Fraction(1), Fraction(1), -2)


def test_sqrt_squares_to_disc():
    r = QuadraticNumber.sqrt(8)
    assert r * r == 8
    assert (r * r).is_integer() and (r * r).to_int() == 8


def test_three_plus_sqrt2_formatting():
    # (1 + 5 + sqrt(8)) / 2 in the field of sqrt(8)
    alpha = QuadraticNumber(Fraction(3), Fraction(1, 2), 8)
    assert str(alpha) == "3 + sqrt(2)"
    assert abs(float(alpha) - 4.414213562) < 1e-9


def test_to_int_refuses_irrational():
    with pytest.raises(ValueError):
        qn(1, 1).to_int()


def test_sign_and_order():
    assert qn(3, Fraction(-1, 2)).sign() == 1  # 3 - sqrt(2)
    assert qn(-3, 1).sign() == -1  # -3 + 2 sqrt(2)
    assert qn(1, 0) < qn(0, 1)


@given(elements(8), elements(8), elements(8))
def test_ring_axioms(x, y, z):
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(elements(5))
def test_inverse_and_norm(x):
    if x == 0:
        return
    assert x * x.inverse() == 1
    assert (x * x.conjugate()).is_rational()
    assert x * x.conjugate() == x.norm()


@given(elements(12), st.integers(min_value=-6, max_value=6))
def test_integer_powers(x, k):
    if x == 0 and k < 0:
        return
    expected = QuadraticNumber(Fraction(1), Fraction(0), 12)
    for _ in range(abs(k)):
        expected = expected * x
    if k < 0:
        expected = expected.inverse()
    assert x**k == expected


@given(elements(17))
def test_float_matches_components(x):
    assert abs(float(x) - (float(x.rational) + float(x.surd) * 17**0.5)) < 1e-6 * (1 + abs(float(x)))
