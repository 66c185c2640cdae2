"""Siegel mass formulas, classical and quasi-parabolic."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .curve_zeta import CurveData, zeta_eval
from .exact_arith import format_rational
from .finite_field import gl_order
from .parabolic_flags import QuasiParabolicData, flag_count, validate_parabolic


@dataclass(frozen=True)
class MassReport:
    """Exact mass together with the factors it is the product of."""

    value: Fraction
    flag_factor: Fraction
    power_factor: Fraction
    unit_factor: Fraction
    zeta_factors: tuple[Fraction, ...] = field(default=())

    def __post_init__(self) -> None:
        product = self.flag_factor * self.power_factor * self.unit_factor
        for z in self.zeta_factors:
            product *= z
        assert product == self.value, "mass differs from the product of its factors"

    @property
    def factors(self) -> dict[str, Any]:
        return {
            "flag_factor": self.flag_factor,
            "power_factor": self.power_factor,
            "unit_factor": self.unit_factor,
            "zeta_factors": list(self.zeta_factors),
        }

    def to_json(self) -> dict[str, Any]:
        f = self.factors
        return {
            "value": format_rational(self.value),
            "factors": {
                "flag_factor": format_rational(f["flag_factor"]),
                "power_factor": format_rational(f["power_factor"]),
                "unit_factor": format_rational(f["unit_factor"]),
                "zeta_factors": [format_rational(z) for z in f["zeta_factors"]],
            },
        }


def hom_inj_factor(r: int, q: int, s: int) -> Fraction:
    """(|GL_r(F_q)| / q^(r^2))^s: the share of r x r matrices that are invertible, per point."""
    if r < 1 or q < 2 or s < 0:
        raise ValueError("need r >= 1, q >= 2, s >= 0")
    return Fraction(gl_order(r, q), q ** (r * r)) ** s


def _mass(curve: CurveData, r: int, flag_factor: int) -> MassReport:
    q, g = curve.q, curve.genus
    power = Fraction(q) ** ((r * r - 1) * (g - 1))
    unit = Fraction(1, q - 1)
    zetas = tuple(zeta_eval(curve, j, marked=False) for j in range(2, r + 1))
    value = Fraction(flag_factor) * power * unit
    for z in zetas:
        value *= z
    return MassReport(value, Fraction(flag_factor), power, unit, zetas)


def quasi_parabolic_mass(curve: CurveData, data: QuasiParabolicData) -> MassReport:
    """Sum of 1/|ParAut(E)| over quasi-parabolic bundles of fixed determinant."""
    validate_parabolic(data, curve)
    return _mass(curve, data.rank, flag_count(data, curve.q))


def classical_mass(curve: CurveData, r: int) -> MassReport:
    """Sum of 1/|Aut(E)| over rank-r bundles of fixed determinant."""
    if r < 1:
        raise ValueError("rank must be at least 1")
    return _mass(curve, r, 1)
