"""Binet-style closed forms evaluated exactly in a real quadratic field.

Counts use ``disc = q(q-4)`` with roots ``(q-2 +- sqrt(disc))/2`` whose
product is 1. Label sums use ``disc = q^2-2q-7`` with roots
``(q+1 +- sqrt(disc))/2`` whose product is ``q+2``.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .algebra import solve_exact
from .quadratic import QuadraticNumber
from .sequences import CountVector, _require_hyperbolic, sums_by_recurrence


class ClosedFormError(ValueError):
    """A closed form evaluated to a non-integer (a transcription error)."""


def count_disc(q: int) -> int:
    return q * (q - 4)


def count_roots(q: int) -> tuple[QuadraticNumber, QuadraticNumber]:
    q = _require_hyperbolic(q)
    r = QuadraticNumber.sqrt(count_disc(q))
    return (r + (q - 2)) / 2, (-r + (q - 2)) / 2


def sum_disc(q: int) -> int:
    return q * q - 2 * q - 7


def sum_roots(q: int) -> tuple[QuadraticNumber, QuadraticNumber]:
    q = _require_hyperbolic(q)
    r = QuadraticNumber.sqrt(sum_disc(q))
    return (r + (q + 1)) / 2, (-r + (q + 1)) / 2


def _binet(coef: QuadraticNumber, roots, n: int) -> QuadraticNumber:
    """``coef * r1**n + conj(coef) * r2**n``."""
    r1, r2 = roots
    return coef * r1**n + coef.conjugate() * r2**n


def _to_int(value: QuadraticNumber, what: str) -> int:
    try:
        return value.to_int()
    except ValueError as exc:
        raise ClosedFormError(f"{what} evaluated to {value}") from exc


def a_coefficient(q: int) -> QuadraticNumber:
    D = count_disc(q)
    return QuadraticNumber(Fraction(2 - q, 2), Fraction(D + 2, 2 * D), D)


def b_coefficient(q: int) -> QuadraticNumber:
    D = count_disc(q)
    return QuadraticNumber(Fraction(q - 3, 2), Fraction(1 - q, 2 * q), D)


def closed_a(q: int, n: int) -> QuadraticNumber:
    return _binet(a_coefficient(q), count_roots(q), n) + 1


def closed_b(q: int, n: int) -> QuadraticNumber:
    return _binet(b_coefficient(q), count_roots(q), n) - 1


def closed_e(q: int, n: int) -> QuadraticNumber:
    return _binet(a_coefficient(q), count_roots(q), n) - n + 2


def printed_closed_d(q: int, n: int) -> QuadraticNumber:
    """The d_n formula exactly as stated; it does not reproduce the counts."""
    D = count_disc(q)
    coef = QuadraticNumber(Fraction(q * q - 5 * q + 5, 2 * (q - 4)), Fraction(-(q * q - 3 * q - 1), 2 * D), D)
    return _binet(coef, count_roots(q), n) + n - Fraction(1, q - 4) + 1


def printed_closed_s(q: int, n: int) -> QuadraticNumber:
    """The s_n formula exactly as stated; it does not reproduce the counts."""
    D = count_disc(q)
    coef = QuadraticNumber(Fraction(q, 2), Fraction(-1, 2 * D), D)
    return _binet(coef, count_roots(q), n) + 2 * n - Fraction(1, q - 4) + 1


def closed_form_counts(q: int, n: int) -> CountVector:
    """Counts at level ``n`` without iterating.

    a, b, e come from their Binet forms (valid for n >= 1); d and s are
    derived from a and b through the linear identities relating them.
    """
    q = _require_hyperbolic(q)
    if n == 0:
        return CountVector(0, 0, 0, 0, 0, 0, 1)
    a_q = closed_a(q, n)
    b_q = closed_b(q, n)
    a = _to_int(a_q, f"a_{n}")
    b = _to_int(b_q, f"b_{n}")
    e = _to_int(closed_e(q, n), f"e_{n}")
    d = _to_int(-a_q + b_q / (q - 4) + (n - 1), f"d_{n}")
    s = _to_int(a_q + b_q * Fraction(q - 3, q - 4) + 2 * n + 1, f"s_{n}")
    return CountVector(n, a, b, 2 * (n - 1), d, e, s)


def shat_coefficient(q: int) -> QuadraticNumber:
    """Coefficient of ``alpha1**n`` in the stated s_hat closed form."""
    D = sum_disc(q)
    return QuadraticNumber(Fraction(-1, 2), Fraction(q - 1, 2 * D), D)


def closed_form_shat(q: int, n: int) -> int:
    """Total label sum at level ``n`` from the stated closed form (holds for n >= 0)."""
    q = _require_hyperbolic(q)
    value = _binet(shat_coefficient(q), sum_roots(q), n) + 2 * 2**n
    return _to_int(value, f"s_hat_{n}")


def solve_shat_constants(q: int, values: dict[int, int] | None = None) -> tuple[QuadraticNumber, QuadraticNumber, QuadraticNumber]:
    """Solve ``beta1*alpha1**n + beta2*alpha2**n + beta3*2**n = s_hat_n`` for n = 1, 2, 3.

    ``values`` defaults to the iterated label sums.
    """
    q = _require_hyperbolic(q)
    if values is None:
        values = {sv.n: sv.s for sv in sums_by_recurrence(q, 3)}
    a1, a2 = sum_roots(q)
    two = a1 * 0 + 2
    ns = (1, 2, 3)
    matrix = [[a1**n, a2**n, two**n] for n in ns]
    rhs = [a1 * 0 + values[n] for n in ns]
    b1, b2, b3 = solve_exact(matrix, rhs)
    return b1, b2, b3


@lru_cache(maxsize=None)
def _solved_constants(q: int):
    return solve_shat_constants(q)


def closed_form_shat_solved(q: int, n: int) -> int:
    b1, b2, b3 = _solved_constants(q)
    a1, a2 = sum_roots(q)
    return _to_int(b1 * a1**n + b2 * a2**n + b3 * 2**n, f"s_hat_{n}")
