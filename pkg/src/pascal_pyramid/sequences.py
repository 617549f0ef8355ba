"""Vertex-type counts and label sums per level, by several independent routes.

Routes: the first-order systems iterated from zero initial values, powers of
the 6x6 transition matrix, and the reduced-order scalar recurrences. Closed
forms live in :mod:`pascal_pyramid.closed_forms`.
"""
from __future__ import annotations

from dataclasses import astuple, dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import Matrix, charpoly, mat_pow, mat_vec, normalize_int, poly_product
from .hpt import check_q

COUNT_FIELDS = ("a", "b", "c", "d", "e", "s")
SUM_FIELDS = ("a_hat", "b_hat", "c_hat", "d_hat", "e_hat", "v_hat", "s_hat")


@dataclass(frozen=True)
class CountVector:
    """Numbers of A, B, C, D, E vertices and of all vertices on level ``n``."""

    n: int
    a: int
    b: int
    c: int
    d: int
    e: int
    s: int

    def values(self) -> tuple[int, ...]:
        return astuple(self)[1:]


@dataclass(frozen=True)
class SumVector:
    """Label sums per vertex kind on level ``n``; ``v`` covers type-1 vertices."""

    n: int
    a: int
    b: int
    c: int
    d: int
    e: int
    v: int
    s: int

    def values(self) -> tuple[int, ...]:
        return astuple(self)[1:]


def _require_hyperbolic(q: int) -> int:
    q = check_q(q)
    if q == 4:
        raise ValueError("q=4 is the Euclidean pyramid; use euclidean_counts/euclidean_sums")
    return q


def counts_by_recurrence(q: int, n_max: int) -> list[CountVector]:
    """Iterate the first-order count system from zero values at ``n = 1``."""
    q = _require_hyperbolic(q)
    out = [CountVector(0, 0, 0, 0, 0, 0, 1)]
    a = b = c = d = e = 0
    for n in range(1, n_max + 1):
        if n > 1:
            a, b, c, d, e = a + b + 1, (q - 4) * a + (q - 3) * b, c + 2, a + d, b + e
        out.append(CountVector(n, a, b, c, d, e, a + b + c + d + e + 3))
    return out[: n_max + 1]


def lemma31_identities(cv: CountVector, q: int, strict: bool = False) -> bool:
    """Check ``d = -a + b/(q-4) + (n-1)`` and ``e = a - (n-1)``.

    With ``strict=True`` a failure raises ``ValueError`` naming the identity.
    """
    q = _require_hyperbolic(q)
    if cv.n < 1:
        raise ValueError("the identities are stated for n >= 1")
    expected_d = -cv.a + Fraction(cv.b, q - 4) + (cv.n - 1)
    expected_e = cv.a - (cv.n - 1)
    failures = []
    if cv.d != expected_d:
        failures.append(f"d identity: expected {expected_d}, got {cv.d}")
    if cv.e != expected_e:
        failures.append(f"e identity: expected {expected_e}, got {cv.e}")
    if failures and strict:
        raise ValueError(f"n={cv.n}: " + "; ".join(failures))
    return not failures


def sums_by_recurrence(q: int, n_max: int, literal_c: bool = False) -> list[SumVector]:
    """Iterate the first-order label-sum system from zero values at ``n = 1``.

    The D line reads ``a_hat + c_hat + 3 d_hat + 2 e_hat``. ``literal_c=True``
    substitutes the vertex count ``c_n`` for ``c_hat`` instead; this variant
    exists only to demonstrate that it contradicts the graph.
    """
    q = _require_hyperbolic(q)
    out = [SumVector(0, 0, 0, 0, 0, 0, 1, 1)]
    a = b = c = d = e = 0
    for n in range(1, n_max + 1):
        if n > 1:
            c_term = 2 * (n - 2) if literal_c else c
            a, b, c, d, e = (
                2 * a + 2 * b + 2,
                (q - 4) * a + (q - 3) * b,
                2 * c + 4,
                a + c_term + 3 * d + 2 * e,
                b + (q - 4) * d + (q - 2) * e,
            )
        out.append(SumVector(n, a, b, c, d, e, 3, a + b + c + d + e + 3))
    return out[: n_max + 1]


def euclidean_counts(n: int) -> tuple[int, int, int, int]:
    """``(s, s_hat, c, d)`` for q = 4, the ordinary Pascal pyramid.

    ``c`` counts the non-corner vertices of the three faces and grows by 3
    per level; ``d`` counts interior vertices and grows by one face's share
    ``c/3``.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    c = d = 0
    for _ in range(1, n):
        c, d = c + 3, d + c // 3
    return (n + 1) * (n + 2) // 2, 3**n, c, d


def euclidean_count_vector(n: int) -> CountVector:
    s, _, c, d = euclidean_counts(n)
    return CountVector(n, 0, 0, c, d, 0, s)


def euclidean_sum_vector(n: int) -> SumVector:
    """Label sums for q = 4: each face row sums to 2**n, the level to 3**n."""
    if n == 0:
        return SumVector(0, 0, 0, 0, 0, 0, 1, 1)
    c = 3 * (2**n - 2)
    return SumVector(n, 0, 0, c, 3**n - c - 3, 0, 3, 3**n)


def transition_matrix(q: int, c_diagonal: int = 2) -> Matrix:
    """Matrix advancing ``(a_hat, b_hat, c_hat, d_hat, e_hat, v_hat)`` one level (n >= 1).

    ``c_diagonal=1`` reproduces a misprinted variant, kept for the erratum report.
    """
    q = _require_hyperbolic(q)
    F = Fraction
    return [
        [F(2), F(2), F(0), F(0), F(0), F(2, 3)],
        [F(q - 4), F(q - 3), F(0), F(0), F(0), F(0)],
        [F(0), F(0), F(c_diagonal), F(0), F(0), F(4, 3)],
        [F(1), F(0), F(1), F(3), F(2), F(0)],
        [F(0), F(1), F(0), F(q - 4), F(q - 2), F(0)],
        [F(0), F(0), F(0), F(0), F(0), F(1)],
    ]


def _vector_to_sums(n: int, u: Sequence[Fraction]) -> SumVector:
    vals = normalize_int(u)
    return SumVector(n, *vals, sum(vals))


def sums_by_matrix_power(q: int, n: int, matrix: Matrix | None = None) -> SumVector:
    """``u_n = M**(n-1) u_1`` with ``u_1 = (0, 0, 0, 0, 0, 3)``; level 0 is the base vertex."""
    if n == 0:
        return SumVector(0, 0, 0, 0, 0, 0, 1, 1)
    m = transition_matrix(q) if matrix is None else matrix
    u1 = [Fraction(0)] * 5 + [Fraction(3)]
    return _vector_to_sums(n, mat_vec(mat_pow(m, n - 1), u1))


def sums_by_matrix(q: int, n_max: int) -> list[SumVector]:
    m = transition_matrix(q)
    out = [SumVector(0, 0, 0, 0, 0, 0, 1, 1)]
    u = [Fraction(0)] * 5 + [Fraction(3)]
    for n in range(1, n_max + 1):
        if n > 1:
            u = mat_vec(m, u)
        out.append(_vector_to_sums(n, u))
    return out[: n_max + 1]


def matrix_trajectory_sums(q: int, start: Sequence[Fraction], steps: int, matrix: Matrix | None = None) -> list[Fraction]:
    """Component sums of ``M**k start`` for ``k = 0..steps`` (no integrality assumed)."""
    m = transition_matrix(q) if matrix is None else matrix
    u = [Fraction(x) for x in start]
    out = [sum(u)]
    for _ in range(steps):
        u = mat_vec(m, u)
        out.append(sum(u))
    return out


# -- characteristic polynomials ------------------------------------------------


def char_poly_p6(q: int) -> list[int]:
    """Expanded ``(x-1)(x-2)(x^2-(q+1)x+q+2)(x^2+(1-q)x+2)``."""
    q = _require_hyperbolic(q)
    return poly_product([1, -1], [1, -2], [1, -(q + 1), q + 2], [1, 1 - q, 2])


def char_poly_shat(q: int) -> list[int]:
    """Expanded ``(x-2)(x^2-(q+1)x+q+2)``."""
    q = _require_hyperbolic(q)
    return poly_product([1, -2], [1, -(q + 1), q + 2])


def char_poly_ab_hat(q: int) -> list[int]:
    q = _require_hyperbolic(q)
    return poly_product([1, -1], [1, 1 - q, 2])


def char_poly_c_hat() -> list[int]:
    return poly_product([1, -1], [1, -2])


def char_poly_counts(q: int) -> list[int]:
    """Characteristic polynomial of the order-4 count recurrence."""
    q = _require_hyperbolic(q)
    return [1, -q, 2 * q - 2, -q, 1]


def char_poly_ab_counts(q: int) -> list[int]:
    q = _require_hyperbolic(q)
    return [1, -(q - 1), q - 1, -1]


def order6_coefficients(q: int) -> list[int]:
    """Right-hand-side coefficients of the order-6 label-sum recurrence as stated."""
    return [
        2 * q + 3,
        -q * q - 7 * q - 5,
        4 * q * q + 10 * q + 9,
        -5 * q * q - 13 * q - 10,
        2 * q * q + 12 * q + 12,
        -4 * q - 8,
    ]


def coefficients_to_charpoly(coefficients: Sequence[int]) -> list[int]:
    """``x_n = c1 x_{n-1} + ... + ck x_{n-k}``  ->  ``[1, -c1, ..., -ck]``."""
    return [1] + [-c for c in coefficients]


# -- reduced-order recurrences --------------------------------------------------


@dataclass(frozen=True)
class LinearRecurrence:
    """``x_n = sum(coefficients[i] * x_{n-1-i})`` for ``n >= start + order``.

    ``initial_values`` are ``x_start .. x_{start+order-1}``.
    """

    coefficients: tuple
    initial_values: tuple
    start: int = 0

    @property
    def order(self) -> int:
        return len(self.coefficients)

    @property
    def valid_from(self) -> int:
        return self.start + self.order

    def characteristic(self) -> list:
        return coefficients_to_charpoly(self.coefficients)

    def terms(self, n_max: int) -> list:
        """Values ``x_start .. x_n_max``."""
        xs = list(self.initial_values)
        while self.start + len(xs) <= n_max:
            nxt = sum(c * xs[-1 - i] for i, c in enumerate(self.coefficients))
            if isinstance(nxt, Fraction) and nxt.denominator == 1:
                nxt = nxt.numerator
            xs.append(nxt)
        return xs[: n_max - self.start + 1]

    def value(self, n: int):
        if n < self.start:
            raise ValueError(f"n={n} precedes the initial values")
        return self.terms(n)[-1]

    def first_mismatch(self, seq: Sequence, from_index: int | None = None) -> int | None:
        """First ``n`` in ``seq`` where the relation fails, checking from ``from_index``."""
        lo = self.valid_from if from_index is None else from_index
        for n in range(max(lo, self.order), len(seq)):
            if seq[n] != sum(c * seq[n - 1 - i] for i, c in enumerate(self.coefficients)):
                return n
        return None

    @classmethod
    def seeded(cls, coefficients: Sequence, seq: Sequence, valid_from: int) -> "LinearRecurrence":
        """Take initial values from ``seq`` just before ``valid_from``."""
        start = valid_from - len(coefficients)
        return cls(tuple(coefficients), tuple(seq[start:valid_from]), start)


# first index each reduced recurrence holds from (checked against the iterated systems)
VALID_FROM = {
    "count.order4": 5,
    "count.order3": 4,
    "sum.order6": 7,
    "sum.order3_ab": 4,
    "sum.order2_c": 3,
    "s_hat.order3": 3,
}

# first index as stated alongside the formulas; reported when it differs
STATED_FROM = {
    "count.order4": 5,
    "count.order3": 4,
    "sum.order3_ab": 3,
    "sum.order2_c": 2,
    "s_hat.order3": 3,
}


def order_reduced_recurrences(q: int, seed_terms: int = 8) -> dict[str, LinearRecurrence]:
    """Every scalar recurrence, keyed ``"<sequence>.<family>"`` (e.g. ``"d_hat.order6"``).

    Initial values are taken from the iterated first-order systems.
    """
    q = _require_hyperbolic(q)
    counts = counts_by_recurrence(q, seed_terms)
    sums = sums_by_recurrence(q, seed_terms)
    order4 = [q, 2 * (1 - q), q, -1]
    order3 = [q - 1, 1 - q, 1]
    order6 = order6_coefficients(q)
    order3_ab = [q, -(q + 1), 2]
    order2_c = [3, -2]
    order3_s = [q + 3, -(3 * q + 4), 2 * q + 4]

    out: dict[str, LinearRecurrence] = {}
    for name in COUNT_FIELDS:
        seq = [getattr(cv, name) for cv in counts]
        out[f"{name}.order4"] = LinearRecurrence.seeded(order4, seq, VALID_FROM["count.order4"])
        if name in ("a", "b"):
            out[f"{name}.order3"] = LinearRecurrence.seeded(order3, seq, VALID_FROM["count.order3"])
    for name, attr in zip(SUM_FIELDS, ("a", "b", "c", "d", "e", "v", "s")):
        if name == "v_hat":
            continue
        seq = [getattr(sv, attr) for sv in sums]
        out[f"{name}.order6"] = LinearRecurrence.seeded(order6, seq, VALID_FROM["sum.order6"])
        if name in ("a_hat", "b_hat"):
            out[f"{name}.order3"] = LinearRecurrence.seeded(order3_ab, seq, VALID_FROM["sum.order3_ab"])
        if name == "c_hat":
            out[f"{name}.order2"] = LinearRecurrence.seeded(order2_c, seq, VALID_FROM["sum.order2_c"])
        if name == "s_hat":
            out[f"{name}.order3"] = LinearRecurrence.seeded(order3_s, seq, VALID_FROM["s_hat.order3"])
    return out


def family_of(key: str) -> str:
    """Map a recurrence key to its :data:`VALID_FROM` family."""
    name, family = key.split(".")
    if name.endswith("_hat"):
        if family == "order3":
            return "s_hat.order3" if name == "s_hat" else "sum.order3_ab"
        return "sum.order2_c" if family == "order2" else "sum.order6"
    return f"count.{family}"


def sequence_columns(vectors: Sequence, fields: Sequence[str]) -> dict[str, list[int]]:
    attrs = [f.replace("_hat", "") for f in fields]
    return {f: [getattr(v, a) for v in vectors] for f, a in zip(fields, attrs)}


def charpoly_of_transition(q: int) -> list[int]:
    return normalize_int(charpoly(transition_matrix(q)))
