"""Small exact polynomial and matrix helpers over Fractions (or any field type).

Polynomials are coefficient lists in descending powers, ``[1, -3, 2]`` being
``x**2 - 3x + 2``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence, TypeVar

T = TypeVar("T")

Matrix = list[list[Fraction]]


def poly_mul(p: Sequence[T], r: Sequence[T]) -> list[T]:
    out = [0] * (len(p) + len(r) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(r):
            out[i + j] += a * b
    return out


def poly_product(*factors: Sequence[T]) -> list[T]:
    out: list = [1]
    for f in factors:
        out = poly_mul(out, f)
    return out


def poly_eval(p: Sequence[T], x: T) -> T:
    acc = 0 * x
    for c in p:
        acc = acc * x + c
    return acc


def normalize_int(p: Sequence) -> list[int]:
    """Convert integral Fractions to ints; raise if any coefficient is not integral."""
    out = []
    for c in p:
        c = Fraction(c)
        if c.denominator != 1:
            raise ValueError(f"non-integer coefficient {c}")
        out.append(c.numerator)
    return out


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in cols] for row in a]


def mat_vec(a: Matrix, v: Sequence[Fraction]) -> list[Fraction]:
    return [sum((x * y for x, y in zip(row, v)), Fraction(0)) for row in a]


def mat_pow(a: Matrix, k: int) -> Matrix:
    if k < 0:
        raise ValueError("negative power")
    result = identity(len(a))
    base = a
    while k:
        if k & 1:
            result = mat_mul(result, base)
        base = mat_mul(base, base)
        k >>= 1
    return result


def charpoly(a: Matrix) -> list[Fraction]:
    """Characteristic polynomial ``det(xI - A)`` by the Faddeev-LeVerrier recursion."""
    n = len(a)
    coeffs = [Fraction(1)]
    m = [[Fraction(0)] * n for _ in range(n)]
    for k in range(1, n + 1):
        # M_k = A M_{k-1} + c_{k-1} I ; c_k = -tr(A M_k) / k
        am = mat_mul(a, m)
        m = [[am[i][j] + (coeffs[-1] if i == j else 0) for j in range(n)] for i in range(n)]
        am = mat_mul(a, m)
        coeffs.append(-sum(am[i][i] for i in range(n)) / k)
    return coeffs


def solve_exact(a: Sequence[Sequence[T]], b: Sequence[T]) -> list[T]:
    """Solve ``a x = b`` by Gaussian elimination with any exact field elements."""
    n = len(a)
    rows = [list(r) + [b[i]] for i, r in enumerate(a)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular system")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        for r in range(n):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col] / rows[col][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return [rows[i][n] / rows[i][i] for i in range(n)]
