from fractions import Fraction

import pytest
import sympy

from pascal_pyramid.algebra import charpoly, mat_pow, poly_eval, solve_exact
from pascal_pyramid.reference import COUNTS_Q5
from pascal_pyramid.sequences import (
    STATED_FROM,
    VALID_FROM,
    CountVector,
    LinearRecurrence,
    char_poly_p6,
    char_poly_shat,
    charpoly_of_transition,
    coefficients_to_charpoly,
    counts_by_recurrence,
    euclidean_counts,
    family_of,
    lemma31_identities,
    order6_coefficients,
    order_reduced_recurrences,
    sums_by_matrix,
    sums_by_matrix_power,
    sums_by_recurrence,
    transition_matrix,
)

QS = [5, 6, 7, 9]


def test_counts_q5_reference_rows():
    counts = counts_by_recurrence(5, 10)
    for f in ("a", "b", "c", "d", "e", "s"):
        assert [getattr(cv, f) for cv in counts] == COUNTS_Q5[f]
    assert (counts[6].d, counts[6].e) == (16, 17)


def test_counts_q7_level3():
    cv = counts_by_recurrence(7, 3)[3]
    assert (cv.a, cv.b, cv.c, cv.d, cv.e, cv.s) == (2, 3, 4, 1, 0, 13)


def test_counts_q6_level4():
    assert counts_by_recurrence(6, 4)[4] == CountVector(4, 5, 10, 6, 3, 2, 29)


def test_linear_identities():
    assert lemma31_identities(counts_by_recurrence(5, 10)[10], 5)
    assert lemma31_identities(counts_by_recurrence(5, 1)[1], 5)
    assert lemma31_identities(counts_by_recurrence(6, 4)[4], 6)
    assert not lemma31_identities(CountVector(4, 5, 10, 6, 4, 2, 30), 6)


def test_hyperbolic_only():
    with pytest.raises(ValueError):
        counts_by_recurrence(4, 3)


def test_sum_system_examples():
    sums = sums_by_recurrence(5, 4)
    assert sums[3].d == 6
    assert sums[4].e == 8
    assert sums_by_recurrence(5, 4, literal_c=True)[3].d == 4


def test_matrix_examples():
    m = transition_matrix(5)
    u0 = [Fraction(0)] * 5 + [Fraction(1)]
    step = [sum(m[i][j] * u0[j] for j in range(6)) for i in range(6)]
    assert step == [Fraction(2, 3), 0, Fraction(4, 3), 0, 0, 1]
    assert sum(step) == 3
    assert sums_by_matrix_power(5, 4).s == 103


@pytest.mark.parametrize("q", QS)
def test_matrix_route_equals_system(q):
    assert sums_by_matrix(q, 25) == sums_by_recurrence(q, 25)


def test_p6_q5():
    assert char_poly_p6(5) == [1, -13, 65, -159, 200, -122, 28]


@pytest.mark.parametrize("q", QS)
def test_p6_against_sympy(q):
    x = sympy.symbols("x")
    m = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in row] for row in transition_matrix(q)])
    oracle = sympy.Poly(m.charpoly(x).as_expr(), x).all_coeffs()
    assert [int(c) for c in oracle] == char_poly_p6(q) == charpoly_of_transition(q)
    factored = sympy.expand((x - 1) * (x - 2) * (x**2 - (q + 1) * x + q + 2) * (x**2 + (1 - q) * x + 2))
    assert [int(c) for c in sympy.Poly(factored, x).all_coeffs()] == char_poly_p6(q)
    assert poly_eval(char_poly_p6(q), 1) == poly_eval(char_poly_p6(q), 2) == 0


@pytest.mark.parametrize("q", QS)
def test_order6_coefficients(q):
    coeffs = order6_coefficients(q)
    assert coeffs[:2] == [2 * q + 3, -q * q - 7 * q - 5]
    assert coefficients_to_charpoly(coeffs) == char_poly_p6(q)


def test_reduced_recurrence_examples():
    recs = order_reduced_recurrences(5)
    assert recs["s_hat.order3"].value(4) == 8 * 29 - 19 * 9 + 14 * 3 == 103
    assert recs["a_hat.order3"].value(5) == 5 * 18 - 6 * 6 + 2 * 2 == 58
    assert recs["s.order4"].value(6) == 5 * 44 - 8 * 21 + 5 * 11 - 6 == 101


@pytest.mark.parametrize("q", QS)
def test_reduced_recurrences_reproduce_sequences(q):
    counts = counts_by_recurrence(q, 30)
    sums = sums_by_recurrence(q, 30)
    for key, rec in order_reduced_recurrences(q).items():
        name = key.split(".")[0]
        source = sums if name.endswith("_hat") else counts
        col = [getattr(v, name.replace("_hat", "")) for v in source]
        assert rec.terms(30) == col[rec.start:], key
        assert rec.first_mismatch(col) is None
        assert rec.valid_from == VALID_FROM[family_of(key)]


def test_stated_ranges_that_fail_early():
    sums = sums_by_recurrence(5, 10)
    recs = order_reduced_recurrences(5)
    a_hat = [sv.a for sv in sums]
    c_hat = [sv.c for sv in sums]
    assert recs["a_hat.order3"].first_mismatch(a_hat, STATED_FROM["sum.order3_ab"]) == 3
    assert recs["c_hat.order2"].first_mismatch(c_hat, STATED_FROM["sum.order2_c"]) == 2


def test_linear_recurrence_basics():
    fib = LinearRecurrence((1, 1), (0, 1))
    assert fib.terms(10) == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    assert fib.characteristic() == [1, -1, -1]
    assert fib.first_mismatch([0, 1, 1, 2, 4]) == 4
    with pytest.raises(ValueError):
        LinearRecurrence((1,), (1,), start=3).value(1)


def test_euclidean_counts():
    assert euclidean_counts(0)[:2] == (1, 1)
    assert euclidean_counts(4)[0] == 15
    assert euclidean_counts(3)[1] == 27
    for n in range(1, 16):
        s, shat, c, d = euclidean_counts(n)
        assert s == c + d + 3
        assert c == 3 * (n - 1)


def test_algebra_helpers():
    a = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(3)]]
    assert charpoly(a) == [1, -5, 5]
    assert solve_exact(a, [Fraction(3), Fraction(4)]) == [1, 1]
    assert mat_pow(a, 0) == [[1, 0], [0, 1]]
    assert mat_pow(a, 3)[0][0] == 15
