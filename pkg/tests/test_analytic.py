from fractions import Fraction

import pytest
import sympy

from pascal_pyramid.analytic import (
    EUCLIDEAN_RATIO,
    HONEYCOMB_RATIO_APPROX,
    RationalGF,
    dominant_root,
    growth_ratio,
    is_shat_root,
    s_generating_function,
    shat_generating_function,
)
from pascal_pyramid.quadratic import QuadraticNumber
from pascal_pyramid.sequences import char_poly_counts, char_poly_shat, counts_by_recurrence, sums_by_recurrence

QS = [5, 6, 7, 9]


def test_q5_series():
    assert s_generating_function(5).series(7) == [1, 3, 6, 11, 21, 44, 101]
    assert shat_generating_function(5).series(6) == [1, 3, 9, 29, 103, 399]
    assert s_generating_function(5) == RationalGF((1, -2, -1), (1, -5, 8, -5, 1))
    assert shat_generating_function(5) == RationalGF((1, -5, 4), (1, -8, 19, -14))


def test_identity_series():
    assert RationalGF((1, 2, 3), (1, 2, 3)).series(5) == [1, 0, 0, 0, 0]


def test_denominator_must_be_normalized():
    with pytest.raises(ValueError):
        RationalGF((1,), (2, 1))


@pytest.mark.parametrize("q", QS)
def test_series_match_sequences(q):
    assert s_generating_function(q).series(41) == [cv.s for cv in counts_by_recurrence(q, 40)]
    assert shat_generating_function(q).series(41) == [sv.s for sv in sums_by_recurrence(q, 40)]
    assert list(s_generating_function(q).denominator) == char_poly_counts(q)
    assert list(shat_generating_function(q).denominator) == char_poly_shat(q)


@pytest.mark.parametrize("q", [5, 7])
def test_series_against_sympy(q):
    x = sympy.symbols("x")
    for gf in (s_generating_function(q), shat_generating_function(q)):
        num = sum(c * x**i for i, c in enumerate(gf.numerator))
        den = sum(c * x**i for i, c in enumerate(gf.denominator))
        ser = sympy.series(num / den, x, 0, 15).removeO()
        assert [int(ser.coeff(x, i)) for i in range(15)] == gf.series(15)


def test_growth_ratio_q5():
    r = growth_ratio(5, 30)
    assert r.exact == QuadraticNumber(Fraction(3), Fraction(1, 2), 8)
    assert str(r.exact) == "3 + sqrt(2)"
    assert f"{r.value:.6f}" == "4.414214"
    assert r.empirical_error < 1e-6
    assert is_shat_root(5, r.exact)
    assert dominant_root(5) == r.exact


@pytest.mark.parametrize("q", QS)
def test_dominant_root_is_largest(q):
    alpha = dominant_root(q)
    assert is_shat_root(q, alpha)
    assert float(alpha) > 2
    assert abs(float(alpha) - float(alpha.conjugate())) > 0


def test_documentation_constants():
    assert EUCLIDEAN_RATIO == 3
    assert HONEYCOMB_RATIO_APPROX == pytest.approx(10.351)


def test_q4_rejected():
    with pytest.raises(ValueError):
        growth_ratio(4)
