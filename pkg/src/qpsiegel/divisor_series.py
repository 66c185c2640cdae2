"""Counts of effective r-divisors supported away from the marked points.

b_n^(r) is read off from prod_{j=1..r} Z_{X-S}(q^(j-1) t); the two limit
functions return the closed forms of the normalized counts.  The empirical
ratio b_n / q^(rn) is available separately as a diagnostic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .curve_zeta import CurveData, class_number, zeta_eval, zeta_series
from .errors import IntegralityError, RangeError
from .exact_arith import PowerSeries, as_integer, series_mul, series_scale_argument


@dataclass(frozen=True)
class DivisorCountTable:
    rank: int
    counts: tuple[int, ...]
    curve: CurveData

    def __post_init__(self) -> None:
        for n, b in enumerate(self.counts):
            if b < 0:
                raise IntegralityError(f"b_{n}^({self.rank}) = {b} is negative")

    @property
    def precision(self) -> int:
        return len(self.counts)


def r_divisor_generating_series(curve: CurveData, r: int, precision: int) -> PowerSeries:
    if r < 1:
        raise ValueError("rank must be at least 1")
    base = zeta_series(curve, precision)
    out = base
    for j in range(2, r + 1):
        out = series_mul(out, series_scale_argument(base, curve.q ** (j - 1)))
    return out


def r_divisor_series(curve: CurveData, r: int, precision: int) -> DivisorCountTable:
    series = r_divisor_generating_series(curve, r, precision)
    counts = tuple(series.integer_coeffs(f"b^({r})"))
    return DivisorCountTable(r, counts, curve)


def fixed_determinant_count(curve: CurveData, r: int, n: int) -> int:
    """Number of effective r-divisors of degree n with a prescribed determinant.

    Only defined for n > 2g - 2 + s.
    """
    bound = 2 * curve.genus - 2 + curve.marked_count
    if n <= bound:
        raise RangeError(f"n = {n} must exceed 2g - 2 + s = {bound}")
    b_n = r_divisor_series(curve, r, n + 1).counts[n]
    return as_integer(Fraction(b_n) / class_number(curve), f"b_{n}^({r},L)")


def _zeta_product(curve: CurveData, r: int, marked: bool) -> Fraction:
    out = Fraction(1)
    for j in range(2, r + 1):
        out *= zeta_eval(curve, j, marked=marked)
    return out


def limit_unfixed(curve: CurveData, r: int) -> Fraction:
    """lim b_n^(r) / q^(rn)."""
    if r < 1:
        raise ValueError("rank must be at least 1")
    q, g, s = curve.q, curve.genus, curve.marked_count
    return (
        class_number(curve)
        * Fraction(q - 1) ** (s - 1)
        / Fraction(q) ** (g - 1 + s)
        * _zeta_product(curve, r, marked=True)
    )


def limit_fixed_determinant(curve: CurveData, r: int) -> Fraction:
    """lim b^(r, L(rm))_{n+rm} / q^(r chi(m)) with chi(m) = n + rm + r(1 - g)."""
    if r < 1:
        raise ValueError("rank must be at least 1")
    q, g, s = curve.q, curve.genus, curve.marked_count
    return (
        Fraction(q - 1) ** (s - 1)
        * Fraction(q) ** ((r * r - 1) * (g - 1) - s)
        * _zeta_product(curve, r, marked=True)
    )


def empirical_ratio(curve: CurveData, r: int, n: int) -> Fraction:
    """b_n^(r) / q^(rn), exactly."""
    b_n = r_divisor_series(curve, r, n + 1).counts[n]
    return Fraction(b_n, curve.q ** (r * n))


def convergence_gap(curve: CurveData, r: int, n: int) -> Fraction:
    """|b_n^(r) / q^(rn) - limit| relative to the limit."""
    limit = limit_unfixed(curve, r)
    return abs(empirical_ratio(curve, r, n) - limit) / limit
