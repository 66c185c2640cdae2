import itertools

import pytest

from qpsiegel.curve_zeta import CurveData
from qpsiegel.divisor_series import r_divisor_series
from qpsiegel.errors import TooLarge
from qpsiegel.oracles.hnf import (
    iter_affine_hnf,
    iter_local_hnf,
    local_sublattice_count,
    local_sublattice_count_by_submodules,
    p1_divisor_count,
    p1_effective_divisor_count,
)
from qpsiegel.oracles.p1 import INFINITY, parse_points


def local_series(q, r, n):
    """Coefficient of t^n in prod_{j<r} 1/(1 - q^j t), by stars and bars."""
    total = 0
    for exps in itertools.product(range(n + 1), repeat=r):
        if sum(exps) == n:
            term = 1
            for j, e in enumerate(exps):
                term *= q ** (j * e)
            total += term
    return total


def irreducible_degrees(q, n):
    """Monic irreducible polynomials over F_q of each degree <= n, by sieving products."""
    counts = {}
    reducible = set()
    for d in range(1, n + 1):
        monic = [c + (1,) for c in itertools.product(range(q), repeat=d)]
        counts[d] = sum(1 for m in monic if m not in reducible)
        for e in range(1, n - d + 1):
            for a in monic:
                for b in (c + (1,) for c in itertools.product(range(q), repeat=e)):
                    prod = [0] * (d + e + 1)
                    for i, x in enumerate(a):
                        for j, y in enumerate(b):
                            prod[i + j] = (prod[i + j] + x * y) % q
                    reducible.add(tuple(prod))
    return counts


def affine_census_by_points(q, r, n, avoided):
    """Effective r-divisors on A^1 minus ``avoided`` rational points, point by point."""
    points = irreducible_degrees(q, max(n, 1))
    points[1] -= avoided
    series = [1] + [0] * n
    for d, how_many in points.items():
        local = [local_series(q**d, r, k) for k in range(n // d + 1)]
        for _ in range(how_many):
            series = [
                sum(series[i - k * d] * local[k] for k in range(len(local)) if i - k * d >= 0)
                for i in range(n + 1)
            ]
    return series[n]


@pytest.mark.parametrize("q, r, n, expected", [(2, 2, 1, 3), (2, 2, 2, 7), (3, 1, 5, 1), (2, 1, 0, 1)])
def test_local_examples(q, r, n, expected):
    assert local_sublattice_count(q, r, n) == expected


@pytest.mark.parametrize("q, r, n", [(2, 2, 1), (2, 2, 2), (2, 2, 3), (3, 2, 2), (2, 3, 2), (3, 1, 3)])
def test_local_count_two_routes(q, r, n):
    assert local_sublattice_count(q, r, n) == local_sublattice_count_by_submodules(q, r, n)


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_local_count_series(q, r):
    for n in range(5):
        assert local_sublattice_count(q, r, n) == local_series(q, r, n)


def test_hnf_matrices_are_valid_and_distinct():
    mats = list(iter_local_hnf(2, 3, 3))
    assert len(mats) == len(set(mats)) == local_series(2, 3, 3)
    assert all(m.is_valid() and m.colength == 3 for m in mats)
    affine = list(iter_affine_hnf(3, 2, 2, avoid=[0]))
    assert all(m.is_valid() and m.colength == 2 for m in affine)
    assert len(affine) == p1_divisor_count(3, 2, 2, [0])


def test_p1_divisor_examples():
    assert p1_divisor_count(2, 2, 2) == 28
    assert p1_divisor_count(2, 2, 2, [0]) == 12
    assert p1_divisor_count(2, 1, 3, [0]) == 4


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("r", [1, 2])
def test_p1_divisor_count_by_points(q, r):
    for avoid in ([], [0], [0, 1]):
        for n in range(4):
            assert p1_divisor_count(q, r, n, avoid) == affine_census_by_points(q, r, n, len(avoid))


@pytest.mark.parametrize("marks", ["", "inf", "0", "0,inf", "0,1"])
def test_effective_count_matches_series(marks):
    q = 2
    points = parse_points([m for m in marks.split(",") if m], q)
    series = r_divisor_series(CurveData.projective_line(q, len(points)), 2, 5).counts
    assert [p1_effective_divisor_count(q, 2, n, points) for n in range(5)] == list(series)


def test_infinity_handling():
    assert p1_effective_divisor_count(2, 1, 3, [INFINITY]) == p1_divisor_count(2, 1, 3)
    assert [p1_effective_divisor_count(2, 2, n, []) for n in range(3)] == [1, 9, 53]


def test_guard():
    with pytest.raises(TooLarge):
        local_sublattice_count(5, 4, 12)
    with pytest.raises(TooLarge):
        p1_divisor_count(5, 3, 8)
