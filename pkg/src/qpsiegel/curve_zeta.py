"""Zeta functions of a curve X over F_q and of the open curve X - S.

A curve is described only through its Weil numerator
P_X(t) = (1 - t)(1 - qt) Z_X(t) and the number s of rational marked points.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping, Sequence

from .errors import (
    InvalidCounts,
    InvalidCurve,
    NegativeCount,
    NonIntegerClassNumber,
    PoleError,
)
from .exact_arith import (
    Polynomial,
    PowerSeries,
    format_rational,
    poly_eval,
    rat,
    series_from_rational_function,
)


@dataclass(frozen=True)
class CurveData:
    q: int
    genus: int
    weil_numerator: Polynomial
    marked_count: int = 0

    def __post_init__(self) -> None:
        if not isinstance(self.weil_numerator, Polynomial):
            object.__setattr__(self, "weil_numerator", Polynomial(self.weil_numerator))
        q, g, p = self.q, self.genus, self.weil_numerator
        if q < 2:
            raise InvalidCurve(f"q must be at least 2, got {q}")
        if g < 0:
            raise InvalidCurve(f"genus must be non-negative, got {g}")
        if self.marked_count < 0:
            raise InvalidCurve(f"marked_count must be non-negative, got {self.marked_count}")
        if any(c.denominator != 1 for c in p.coeffs):
            raise InvalidCurve(f"Weil numerator {p} has non-integer coefficients")
        if p.degree != 2 * g:
            raise InvalidCurve(f"Weil numerator has degree {p.degree}, expected {2 * g}")
        if p[0] != 1:
            raise InvalidCurve("Weil numerator must satisfy P(0) = 1")
        if p[2 * g] != q**g:
            raise InvalidCurve(f"leading coefficient must be q^g = {q**g}")
        for i in range(g + 1):
            if p[2 * g - i] != q ** (g - i) * p[i]:
                raise InvalidCurve(
                    f"functional equation fails: a_{2 * g - i} != q^{g - i} * a_{i}"
                )

    def with_marked(self, s: int) -> CurveData:
        return CurveData(self.q, self.genus, self.weil_numerator, s)

    @classmethod
    def projective_line(cls, q: int, marked_count: int = 0) -> CurveData:
        return cls(q, 0, Polynomial([1]), marked_count)

    @classmethod
    def from_point_counts(
        cls, q: int, genus: int, counts: Sequence[int], marked_count: int = 0
    ) -> CurveData:
        return cls(q, genus, point_counts_to_numerator(q, genus, counts), marked_count)

    @classmethod
    def from_json(cls, doc: Mapping[str, Any]) -> CurveData:
        """Build from the curve-input JSON object.

        Exactly one of ``weil_numerator`` and ``point_counts`` must be given.
        Marked points come from ``marked_count`` or from the length of
        ``marked_points``.
        """
        try:
            q = int(doc["q"])
            genus = int(doc["genus"])
        except KeyError as exc:
            raise InvalidCurve(f"missing field {exc.args[0]!r}") from None
        has_num = "weil_numerator" in doc
        has_counts = "point_counts" in doc
        if has_num == has_counts:
            raise InvalidCurve("give exactly one of weil_numerator / point_counts")
        if "marked_count" in doc and "marked_points" in doc:
            raise InvalidCurve("give at most one of marked_count / marked_points")
        if "marked_points" in doc:
            s = len(doc["marked_points"])
        else:
            s = int(doc.get("marked_count", 0))
        if has_num:
            return cls(q, genus, Polynomial(rat(c) for c in doc["weil_numerator"]), s)
        return cls.from_point_counts(q, genus, [int(n) for n in doc["point_counts"]], s)

    def to_json(self) -> dict[str, Any]:
        return {
            "q": self.q,
            "genus": self.genus,
            "weil_numerator": [format_rational(c) for c in self.weil_numerator.coeffs],
            "marked_count": self.marked_count,
        }


def _power_sums_to_elementary(p: Sequence[Fraction], k_max: int) -> list[Fraction]:
    # Newton: k e_k = sum_{i=1}^{k} (-1)^(i-1) e_{k-i} p_i
    e = [Fraction(1)]
    for k in range(1, k_max + 1):
        acc = Fraction(0)
        for i in range(1, k + 1):
            acc += (-1) ** (i - 1) * e[k - i] * p[i]
        e.append(acc / k)
    return e


def _elementary_to_power_sums(e: Sequence[Fraction], k_max: int) -> list[Fraction]:
    # p_k = sum_{i=1}^{k-1} (-1)^(i-1) e_i p_{k-i} + (-1)^(k-1) k e_k
    def ek(k: int) -> Fraction:
        return e[k] if k < len(e) else Fraction(0)

    p = [Fraction(0)]
    for k in range(1, k_max + 1):
        acc = (-1) ** (k - 1) * k * ek(k)
        for i in range(1, k):
            acc += (-1) ** (i - 1) * ek(i) * p[k - i]
        p.append(acc)
    return p


def point_counts_to_numerator(q: int, g: int, counts: Sequence[int]) -> Polynomial:
    """Weil numerator from the point counts N_1..N_g over F_q, ..., F_{q^g}."""
    if len(counts) != g:
        raise InvalidCounts(f"expected {g} point counts, got {len(counts)}")
    if any(n < 0 for n in counts):
        raise InvalidCounts("point counts must be non-negative")
    p = [Fraction(0)] + [Fraction(q**i + 1 - n) for i, n in enumerate(counts, start=1)]
    e = _power_sums_to_elementary(p, g)
    a = [(-1) ** k * e[k] for k in range(g + 1)]
    if any(c.denominator != 1 for c in a):
        raise InvalidCounts(f"counts {list(counts)} give non-integral Weil coefficients")
    full = a + [Fraction(q ** (g - i)) * a[i] for i in range(g - 1, -1, -1)]
    poly = Polynomial(full)
    try:
        curve = CurveData(q, g, poly)
        class_number(curve)
        numerator_to_point_counts(curve, max(2 * g, 1))
    except InvalidCurve as exc:
        raise InvalidCounts(f"counts {list(counts)} do not define a curve: {exc}") from None
    return poly


def numerator_to_point_counts(curve: CurveData, up_to: int) -> list[int]:
    """N_1..N_m recovered from P_X via Newton's identities."""
    if up_to < 1:
        raise ValueError("up_to must be at least 1")
    q, poly = curve.q, curve.weil_numerator
    e = [(-1) ** k * poly[k] for k in range(poly.degree + 1)]
    p = _elementary_to_power_sums(e, up_to)
    counts = []
    for i in range(1, up_to + 1):
        n = q**i + 1 - p[i]
        if n < 0:
            raise NegativeCount(f"N_{i} = {n} is negative")
        counts.append(int(n))
    return counts


def zeta_series(curve: CurveData, precision: int) -> PowerSeries:
    """(1 - t)^s P_X(t) / ((1 - t)(1 - qt)) to the given precision."""
    if precision < 1:
        raise ValueError("precision must be at least 1")
    numer = curve.weil_numerator * Polynomial([1, -1]) ** curve.marked_count
    denom = Polynomial([1, -1]) * Polynomial([1, -curve.q])
    return series_from_rational_function(numer, denom, precision)


def zeta_eval(curve: CurveData, j: int, marked: bool = False) -> Fraction:
    """Z_X(q^-j), or Z_{X-S}(q^-j) when ``marked``; only j >= 2 is allowed."""
    if j <= 1:
        raise PoleError(f"q^-{j} is at or beyond the pole t = 1/q")
    t = Fraction(1, curve.q**j)
    value = poly_eval(curve.weil_numerator, t) / ((1 - t) * (1 - curve.q * t))
    if marked:
        value *= (1 - t) ** curve.marked_count
    return value


def class_number(curve: CurveData) -> Fraction:
    """P_X(1): the number of line bundles of any fixed degree."""
    h = poly_eval(curve.weil_numerator, 1)
    if h.denominator != 1 or h <= 0:
        raise NonIntegerClassNumber(f"P_X(1) = {format_rational(h)} is not a positive integer")
    return h
