"""Rational generating functions and growth ratios of the level sequences."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import poly_eval
from .closed_forms import sum_roots
from .quadratic import QuadraticNumber
from .sequences import _require_hyperbolic, char_poly_shat, sums_by_recurrence

# limits of s_hat_{n+1}/s_hat_n for the Euclidean pyramid and for the
# pyramid over the {4,3,5} honeycomb; quoted for comparison only
EUCLIDEAN_RATIO = 3
HONEYCOMB_RATIO_APPROX = 10.351


@dataclass(frozen=True)
class RationalGF:
    """``numerator(x) / denominator(x)`` with coefficients in ascending powers.

    ``denominator[0]`` must be 1 so the series has integer coefficients.
    """

    numerator: tuple[int, ...]
    denominator: tuple[int, ...]

    def __post_init__(self):
        if not self.denominator or self.denominator[0] != 1:
            raise ValueError("denominator must have constant term 1")

    def series(self, n_terms: int) -> list[int]:
        """First ``n_terms`` power-series coefficients by exact long division."""
        out: list[int] = []
        den = self.denominator
        for n in range(n_terms):
            c = self.numerator[n] if n < len(self.numerator) else 0
            c -= sum(den[k] * out[n - k] for k in range(1, min(n, len(den) - 1) + 1))
            out.append(c)
        return out


def gf_series(gf: RationalGF, n_terms: int) -> list[int]:
    return gf.series(n_terms)


def s_generating_function(q: int) -> RationalGF:
    """Generating function of the vertex counts per level."""
    q = _require_hyperbolic(q)
    return RationalGF((1, -(q - 3), -(q - 4)), (1, -q, 2 * q - 2, -q, 1))


def shat_generating_function(q: int) -> RationalGF:
    """Generating function of the label sums (path counts) per level."""
    q = _require_hyperbolic(q)
    return RationalGF((1, -q, 4), (1, -(q + 3), 3 * q + 4, -(2 * q + 4)))


@dataclass(frozen=True)
class GrowthRatio:
    q: int
    exact: QuadraticNumber
    value: float
    n: int | None = None
    empirical: Fraction | None = None

    @property
    def empirical_error(self) -> float | None:
        if self.empirical is None:
            return None
        return abs(float(self.empirical) - self.value)


def dominant_root(q: int) -> QuadraticNumber:
    """``(1 + q + sqrt(q^2 - 2q - 7)) / 2``, the largest root driving s_hat."""
    return sum_roots(q)[0]


def growth_ratio(q: int, n: int | None = None) -> GrowthRatio:
    """Limit of ``s_hat_{n+1}/s_hat_n``; with ``n`` also the empirical ratio there."""
    q = _require_hyperbolic(q)
    alpha = dominant_root(q)
    empirical = None
    if n is not None:
        sums = sums_by_recurrence(q, n + 1)
        empirical = Fraction(sums[n + 1].s, sums[n].s)
    return GrowthRatio(q, alpha, float(alpha), n, empirical)


def is_shat_root(q: int, x: QuadraticNumber) -> bool:
    return poly_eval(char_poly_shat(q), x) == 0
