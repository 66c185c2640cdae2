"""Exact rationals, dense univariate polynomials and truncated power series.

``Rational`` is :class:`fractions.Fraction`; it is always reduced with a
positive denominator, which is exactly the invariant we need.  Polynomials
and series are immutable and hold their coefficients lowest degree first.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import IntegralityError, ZeroConstantTerm

Rational = Fraction
RationalLike = Union[int, Fraction, str]


def rat(x: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to a Fraction."""
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted")
    return Fraction(x)


def format_rational(x: RationalLike) -> str:
    """Serialize as ``"num/den"``, or ``"n"`` for integers."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def as_integer(x: RationalLike, what: str = "value") -> int:
    x = Fraction(x)
    if x.denominator != 1:
        raise IntegralityError(f"{what} = {format_rational(x)} is not an integer")
    return x.numerator


class Polynomial:
    """Dense polynomial in one variable with Fraction coefficients.

    Trailing zeros are stripped, so the zero polynomial has no coefficients.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [rat(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with ``-1`` for the zero polynomial."""
        return len(self._coeffs) - 1

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(format_rational(c) for c in self._coeffs)}])"

    def __add__(self, other: Polynomial) -> Polynomial:
        n = max(len(self), len(other))
        return Polynomial(self[i] + other[i] for i in range(n))

    def __sub__(self, other: Polynomial) -> Polynomial:
        n = max(len(self), len(other))
        return Polynomial(self[i] - other[i] for i in range(n))

    def __mul__(self, other: Polynomial | RationalLike) -> Polynomial:
        if not isinstance(other, Polynomial):
            c = rat(other)
            return Polynomial(c * a for a in self._coeffs)
        if not self._coeffs or not other._coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self) + len(other) - 1)
        for i, a in enumerate(self._coeffs):
            if a:
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out = Polynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, x: RationalLike) -> Fraction:
        return poly_eval(self, x)


def poly_eval(p: Polynomial, x: RationalLike) -> Fraction:
    """Exact Horner evaluation."""
    x = rat(x)
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * x + c
    return acc


class PowerSeries:
    """Truncated power series: coefficients of t^0 .. t^(precision-1)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[RationalLike], precision: int | None = None):
        cs = [rat(c) for c in coeffs]
        if precision is None:
            precision = len(cs)
        if precision < 0:
            raise ValueError("precision must be non-negative")
        if len(cs) > precision:
            cs = cs[:precision]
        else:
            cs.extend([Fraction(0)] * (precision - len(cs)))
        self._coeffs = tuple(cs)

    @classmethod
    def from_polynomial(cls, p: Polynomial, precision: int) -> PowerSeries:
        return cls([p[i] for i in range(precision)], precision)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def precision(self) -> int:
        return len(self._coeffs)

    def __getitem__(self, n: int) -> Fraction:
        if not 0 <= n < len(self._coeffs):
            raise IndexError(f"coefficient {n} is beyond precision {self.precision}")
        return self._coeffs[n]

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PowerSeries):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        body = ", ".join(format_rational(c) for c in self._coeffs)
        return f"PowerSeries([{body}], precision={self.precision})"

    def __mul__(self, other: PowerSeries) -> PowerSeries:
        return series_mul(self, other)

    def truncate(self, precision: int) -> PowerSeries:
        return PowerSeries(self._coeffs[:precision], min(precision, self.precision))

    def integer_coeffs(self, what: str = "coefficient") -> list[int]:
        return [as_integer(c, f"{what} {n}") for n, c in enumerate(self._coeffs)]


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated to the smaller precision."""
    n = min(a.precision, b.precision)
    ac, bc = a.coeffs, b.coeffs
    out = []
    for k in range(n):
        out.append(sum((ac[i] * bc[k - i] for i in range(k + 1)), Fraction(0)))
    return PowerSeries(out, n)


def series_scale_argument(a: PowerSeries, c: RationalLike) -> PowerSeries:
    """Substitute t -> c*t."""
    c = rat(c)
    out = []
    power = Fraction(1)
    for coeff in a.coeffs:
        out.append(coeff * power)
        power *= c
    return PowerSeries(out, a.precision)


def series_from_rational_function(
    numer: Polynomial, denom: Polynomial, precision: int
) -> PowerSeries:
    """Expand ``numer / denom`` by long division up to t^(precision-1)."""
    d0 = denom[0]
    if d0 == 0:
        raise ZeroConstantTerm("denominator vanishes at t = 0")
    out: list[Fraction] = []
    for n in range(precision):
        acc = numer[n]
        for k in range(1, min(n, denom.degree) + 1):
            acc -= denom[k] * out[n - k]
        out.append(acc / d0)
    return PowerSeries(out, precision)
