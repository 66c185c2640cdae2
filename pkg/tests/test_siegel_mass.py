from fractions import Fraction

import pytest

from qpsiegel.curve_zeta import CurveData
from qpsiegel.divisor_series import limit_fixed_determinant
from qpsiegel.errors import PointCountMismatch
from qpsiegel.exact_arith import Polynomial
from qpsiegel.oracles.bundles import p1_mass_census
from qpsiegel.parabolic_flags import QuasiParabolicData, flag_count
from qpsiegel.siegel_mass import classical_mass, hom_inj_factor, quasi_parabolic_mass

P1 = CurveData.projective_line(2)
ELLIPTIC = CurveData(2, 1, Polynomial([1, 0, 2]))


@pytest.mark.parametrize("r, q, s, expected", [(1, 2, 1, Fraction(1, 2)), (2, 2, 1, Fraction(3, 8)), (3, 5, 0, 1)])
def test_hom_inj_factor_examples(r, q, s, expected):
    assert hom_inj_factor(r, q, s) == expected


def test_mass_examples():
    assert quasi_parabolic_mass(P1, QuasiParabolicData(2)).value == Fraction(1, 3)
    assert quasi_parabolic_mass(P1.with_marked(1), QuasiParabolicData.full(2, 1)).value == 1
    assert classical_mass(P1, 2).value == Fraction(1, 3)
    assert classical_mass(ELLIPTIC, 2).value == 3
    assert classical_mass(CurveData.projective_line(3), 2).value == Fraction(1, 32)


def test_q3_classical_mass_against_census():
    # gaps 0, 2, 4, ...: 1/48 + sum_k 1/(4 * 3^(2k+1)) = 1/32
    partial, tail = p1_mass_census(3, 2, 0, 40)
    assert partial < Fraction(1, 32) <= partial + tail


def test_report_factors_multiply_to_value():
    report = quasi_parabolic_mass(ELLIPTIC.with_marked(2), QuasiParabolicData(3, ((1, 2), (1, 1, 1))))
    product = report.flag_factor * report.power_factor * report.unit_factor
    for z in report.zeta_factors:
        product *= z
    assert product == report.value
    doc = report.to_json()
    assert Fraction(doc["value"]) == report.value
    assert set(doc["factors"]) == {"flag_factor", "power_factor", "unit_factor", "zeta_factors"}


def test_mass_validates_point_count():
    with pytest.raises(PointCountMismatch):
        quasi_parabolic_mass(P1, QuasiParabolicData.full(2, 1))


@pytest.mark.parametrize("q", [2, 3, 5])
def test_rank_one_mass(q):
    for curve in (CurveData.projective_line(q, 2), CurveData(q, 1, Polynomial([1, 0, q]), 1)):
        data = QuasiParabolicData.trivial(1, curve.marked_count)
        assert quasi_parabolic_mass(curve, data).value == Fraction(1, q - 1)


def test_derivation_identity_small():
    for curve, data in [
        (P1.with_marked(1), QuasiParabolicData.full(2, 1)),
        (ELLIPTIC.with_marked(2), QuasiParabolicData(3, ((2, 1), (1, 1, 1)))),
    ]:
        mass = quasi_parabolic_mass(curve, data).value
        lhs = mass * hom_inj_factor(data.rank, curve.q, curve.marked_count)
        assert lhs == flag_count(data, curve.q) * limit_fixed_determinant(curve, data.rank)


def test_parabolic_mass_is_flag_multiple_of_classical():
    curve = ELLIPTIC.with_marked(2)
    data = QuasiParabolicData(2, ((1, 1), (1, 1)))
    assert quasi_parabolic_mass(curve, data).value == 9 * classical_mass(curve, 2).value
