import itertools

import pytest

from qpsiegel.curve_zeta import CurveData
from qpsiegel.errors import PointCountMismatch, RankMismatch
from qpsiegel.finite_field import contains, span_key
from qpsiegel.parabolic_flags import (
    FlagType,
    QuasiParabolicData,
    enumerate_flags,
    flag_count,
    gaussian_binomial,
    single_flag_count,
    validate_parabolic,
)


def compositions(r):
    for cuts in itertools.product((0, 1), repeat=r - 1):
        parts, run = [], 1
        for c in cuts:
            if c:
                parts.append(run)
                run = 1
            else:
                run += 1
        parts.append(run)
        yield tuple(parts)


def brute_flag_count(parts, q):
    """Flags built by choosing spans of random vector tuples, deduplicated."""
    r = sum(parts)
    vectors = list(itertools.product(range(q), repeat=r))
    dims = [sum(parts[j:]) for j in range(1, len(parts))]
    layers = []
    for d in dims:
        seen = set()
        for rows in itertools.product(vectors, repeat=d):
            key = span_key(rows, q)
            if len(key) == d:
                seen.add(key)
        layers.append(seen)
    count = 0
    for chain in itertools.product(*layers):
        if all(contains(big, small, q) for big, small in zip(chain, chain[1:])):
            count += 1
    return count


@pytest.mark.parametrize("n, k, q, expected", [(2, 1, 2, 3), (4, 2, 2, 35), (5, 0, 3, 1), (3, 2, 2, 7)])
def test_gaussian_binomial_examples(n, k, q, expected):
    assert gaussian_binomial(n, k, q) == expected


def test_gaussian_binomial_pascal():
    for q in (2, 3, 4):
        for n in range(1, 7):
            for k in range(1, n):
                assert gaussian_binomial(n, k, q) == (
                    gaussian_binomial(n - 1, k - 1, q) + q**k * gaussian_binomial(n - 1, k, q)
                )


def test_flag_count_examples():
    assert flag_count(QuasiParabolicData.full(2, 1), 2) == 3
    assert flag_count(QuasiParabolicData.full(3, 1), 2) == 21
    assert flag_count(QuasiParabolicData.full(2, 2), 3) == 16
    assert flag_count(QuasiParabolicData(4, ((2, 2),)), 2) == 35
    assert flag_count(QuasiParabolicData.trivial(3, 4), 5) == 1


def test_enumerate_flags_examples():
    assert len(enumerate_flags(FlagType((1, 1)), 2)) == 3
    assert len(enumerate_flags(FlagType((3,)), 2)) == 1
    assert len(enumerate_flags(FlagType((2, 1)), 2)) == 7


@pytest.mark.parametrize("parts", [(1, 1), (2, 1), (1, 2), (1, 1, 1)])
def test_enumerate_flags_against_brute_force(parts):
    assert len(enumerate_flags(FlagType(parts), 2)) == brute_flag_count(parts, 2)


@pytest.mark.parametrize("q", [2, 3])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_flags_are_well_formed(q, r):
    for parts in compositions(r):
        ft = FlagType(parts)
        flags = enumerate_flags(ft, q)
        assert len(flags) == len(set(flags)) == single_flag_count(ft, q)
        for f in flags:
            assert tuple(len(U) for U in f) == ft.dims()
            assert all(contains(a, b, q) for a, b in zip(f, f[1:]))


def test_validate_parabolic():
    p1 = CurveData.projective_line(2, 1)
    validate_parabolic(QuasiParabolicData(2, ((1, 1),)), p1)
    with pytest.raises(PointCountMismatch):
        validate_parabolic(QuasiParabolicData(2, ((1, 1), (2,))), p1)
    with pytest.raises(RankMismatch):
        validate_parabolic(QuasiParabolicData(3, ((2, 2),)), p1)


def test_json_round_trip():
    data = QuasiParabolicData(3, ((1, 2), (3,), (1, 1, 1)))
    assert QuasiParabolicData.from_json(data.to_json()) == data


def test_flag_type_rejects_non_positive_parts():
    with pytest.raises(ValueError):
        FlagType((2, 0))
