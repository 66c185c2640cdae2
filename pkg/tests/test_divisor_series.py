from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qpsiegel.curve_zeta import CurveData, class_number, zeta_series
from qpsiegel.divisor_series import (
    convergence_gap,
    empirical_ratio,
    fixed_determinant_count,
    limit_fixed_determinant,
    limit_unfixed,
    r_divisor_series,
)
from qpsiegel.errors import IntegralityError, RangeError
from qpsiegel.exact_arith import Polynomial

P1 = CurveData.projective_line(2)
ELLIPTIC = CurveData(2, 1, Polynomial([1, 0, 2]))
GENUS2 = CurveData.from_point_counts(2, 2, [3, 5])


def support_stratified_b2(q, n):
    """b_n^(2) on P^1 from the rank-2 local factors at each closed point.

    Effective 2-divisors factor over points; at a point of degree d the local
    count in colength k is the coefficient of t^k in 1/((1-t)(1-q^d t)).
    """

    def mobius(m):
        out, k = 1, 2
        while k * k <= m:
            if m % k == 0:
                m //= k
                if m % k == 0:
                    return 0
                out = -out
            k += 1
        return -out if m > 1 else out

    # closed points of P^1 over F_q by degree: necklace count, plus infinity
    def monic_irreducibles(d):
        return sum(mobius(d // e) * q**e for e in range(1, d + 1) if d % e == 0) // d

    counts = {d: monic_irreducibles(d) + (1 if d == 1 else 0) for d in range(1, n + 1)}
    series = [0] * (n + 1)
    series[0] = 1
    for d, how_many in counts.items():
        local = [(q ** (d * (k + 1)) - 1) // (q**d - 1) for k in range(n // d + 1)]
        for _ in range(how_many):
            new = [0] * (n + 1)
            for i, c in enumerate(series):
                for k, lc in enumerate(local):
                    if i + k * d <= n:
                        new[i + k * d] += c * lc
            series = new
    return series


def test_r_divisor_series_examples():
    assert r_divisor_series(P1, 2, 3).counts == (1, 9, 53)
    assert r_divisor_series(P1.with_marked(1), 2, 3).counts == (1, 6, 28)


def test_r_divisor_series_rank_one_is_zeta():
    for curve in (P1, P1.with_marked(2), ELLIPTIC, GENUS2):
        assert list(r_divisor_series(curve, 1, 6).counts) == list(zeta_series(curve, 6))


def test_support_stratification_oracle():
    for q in (2, 3):
        expected = support_stratified_b2(q, 5)
        assert list(r_divisor_series(CurveData.projective_line(q), 2, 6).counts) == expected


def test_fixed_determinant_examples():
    assert fixed_determinant_count(P1, 2, 1) == 9
    assert fixed_determinant_count(P1.with_marked(2), 1, 3) == 4
    assert fixed_determinant_count(ELLIPTIC, 1, 1) == 1


def test_fixed_determinant_range():
    with pytest.raises(RangeError):
        fixed_determinant_count(ELLIPTIC, 2, 0)
    with pytest.raises(RangeError):
        fixed_determinant_count(P1.with_marked(3), 1, 1)


@pytest.mark.parametrize("curve", [ELLIPTIC, GENUS2, ELLIPTIC.with_marked(1)])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_fixed_determinant_integrality(curve, r):
    # divisibility by P_X(1) starts only past r(2g - 2 + s) once r > 1
    start = r * (2 * curve.genus - 2 + curve.marked_count) + 1
    for n in range(start, start + 5):
        assert fixed_determinant_count(curve, r, n) * class_number(curve) == (
            r_divisor_series(curve, r, n + 1).counts[n]
        )


def test_fixed_determinant_not_integral_below_rank_bound():
    # n = 3 > 2g - 2 = 2, yet b_3^(2) = 261 is not divisible by P_X(1) = 5
    assert r_divisor_series(GENUS2, 2, 4).counts[3] == 261
    with pytest.raises(IntegralityError):
        fixed_determinant_count(GENUS2, 2, 3)


def test_limit_fixed_rank_one_direct_count():
    # a degree-n class on P^1 holds (q^(n+1) - 1)/(q - 1) effective divisors, chi = n + 1
    for q in (2, 3, 5):
        ratios = [Fraction(q ** (n + 1) - 1, (q - 1) * q ** (n + 1)) for n in (10, 40)]
        limit = limit_fixed_determinant(CurveData.projective_line(q), 1)
        assert limit == Fraction(1, q - 1)
        assert abs(ratios[1] - limit) < abs(ratios[0] - limit) < Fraction(1, q**10)


def test_limit_examples():
    assert limit_unfixed(P1, 1) == 2
    assert limit_unfixed(P1, 2) == Fraction(16, 3)
    assert limit_unfixed(P1.with_marked(2), 1) == Fraction(1, 2)
    assert limit_fixed_determinant(P1.with_marked(1), 2) == Fraction(1, 8)
    assert limit_fixed_determinant(P1, 1) == 1
    # the elliptic value is 3: (q-1)^-1 q^0 Z_X(1/4) with Z_X(1/4) = 3
    assert limit_fixed_determinant(ELLIPTIC, 2) == 3


@pytest.mark.parametrize("curve", [P1, P1.with_marked(1), ELLIPTIC, GENUS2, GENUS2.with_marked(2)])
@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_limit_relation(curve, r):
    q, g = curve.q, curve.genus
    assert limit_fixed_determinant(curve, r) == (
        limit_unfixed(curve, r) / (class_number(curve) * Fraction(q) ** (r * r * (1 - g)))
    )


@pytest.mark.parametrize("curve", [P1, P1.with_marked(2), ELLIPTIC, GENUS2])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_empirical_ratio_converges(curve, r):
    gaps = [convergence_gap(curve, r, n) for n in (10, 20, 30)]
    assert gaps[2] < Fraction(1, 10**3)
    assert gaps[2] <= gaps[1] <= gaps[0]
    assert empirical_ratio(curve, r, 0) == 1


@settings(max_examples=30, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.integers(0, 3), st.integers(1, 3))
def test_p1_limit_closed_form(q, s, r):
    # on P^1, Z_{X-S}(q^-j) = (1-q^-j)^(s-1) / (1 - q^(1-j))
    curve = CurveData.projective_line(q, s)
    expected = Fraction(q - 1) ** (s - 1) / Fraction(q) ** (s - 1)
    for j in range(2, r + 1):
        x = Fraction(1, q**j)
        expected *= (1 - x) ** (s - 1) / (1 - q * x)
    assert limit_unfixed(curve, r) == expected
