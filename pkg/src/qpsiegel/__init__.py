"""Exact Siegel mass formulas for vector bundles with quasi-parabolic structure.

Formula side: :mod:`curve_zeta`, :mod:`divisor_series`, :mod:`parabolic_flags`,
:mod:`siegel_mass`.  Enumeration side: :mod:`qpsiegel.oracles`.
"""

from .curve_zeta import CurveData, class_number, zeta_eval, zeta_series
from .divisor_series import (
    fixed_determinant_count,
    limit_fixed_determinant,
    limit_unfixed,
    r_divisor_series,
)
from .parabolic_flags import FlagType, QuasiParabolicData, flag_count, gaussian_binomial
from .siegel_mass import MassReport, classical_mass, hom_inj_factor, quasi_parabolic_mass

__all__ = [
    "CurveData",
    "FlagType",
    "MassReport",
    "QuasiParabolicData",
    "class_number",
    "classical_mass",
    "fixed_determinant_count",
    "flag_count",
    "gaussian_binomial",
    "hom_inj_factor",
    "limit_fixed_determinant",
    "limit_unfixed",
    "quasi_parabolic_mass",
    "r_divisor_series",
    "zeta_eval",
    "zeta_series",
]
