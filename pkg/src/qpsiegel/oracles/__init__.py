"""Brute-force censuses used to check every closed-form count."""

from .bundles import (
    CensusRow,
    MassCensus,
    ParabolicCensus,
    SplittingType,
    aut_order_splitting,
    count_automorphisms_brute,
    mass_tail_bound,
    p1_mass_census,
    p1_parabolic_census,
    splitting_types,
)
from .hnf import (
    HnfMatrix,
    local_sublattice_count,
    local_sublattice_count_by_submodules,
    p1_divisor_count,
    p1_effective_divisor_count,
)
from .hyperplanes import hyperplane_avoid_count, hyperplane_complement_count
from .p1 import INFINITY, parse_points
from .sections import Balance, eq8_balance_check, hom_inj_count_p1, hom_inj_limit_attained

__all__ = [
    "Balance",
    "CensusRow",
    "HnfMatrix",
    "INFINITY",
    "MassCensus",
    "ParabolicCensus",
    "SplittingType",
    "aut_order_splitting",
    "count_automorphisms_brute",
    "eq8_balance_check",
    "hom_inj_count_p1",
    "hom_inj_limit_attained",
    "hyperplane_avoid_count",
    "hyperplane_complement_count",
    "local_sublattice_count",
    "local_sublattice_count_by_submodules",
    "mass_tail_bound",
    "p1_divisor_count",
    "p1_effective_divisor_count",
    "p1_mass_census",
    "p1_parabolic_census",
    "parse_points",
    "splitting_types",
]
