"""Vector bundles on P^1 over F_p: splitting types, automorphisms, mass censuses.

Every bundle on P^1 splits as O(a_1) + ... + O(a_r), so the isomorphism
classes of fixed degree are the weakly decreasing integer vectors with that
sum.  A quasi-parabolic structure adds a flag in the fiber over each marked
point; classes of (E, flags) are the Aut(E)-orbits on the product of flag
varieties.

Aut(E) acts on the fibers through its image in the evaluated endomorphism
algebra A (the span of End(E) evaluated at the marked points).  The map
Aut(E) -> units(A) is onto, and its kernel has order |End(E)| / |A|, so every
stabilizer is a small group computed inside units(A) times that kernel.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from ..errors import OracleMismatch, TooLarge
from ..finite_field import apply_to_subspace, det_mod, gl_order, require_prime, rref_rows
from ..parabolic_flags import Flag, FlagType, QuasiParabolicData, enumerate_flags
from .p1 import Point, det_of_forms, monomial_value

# Largest evaluated algebra whose elements are listed one by one.
ALGEBRA_GUARD = 2**20
# Largest endomorphism ring enumerated by the brute-force automorphism count.
ENDOMORPHISM_GUARD = 2**20


@dataclass(frozen=True, order=True)
class SplittingType:
    twists: tuple[int, ...]

    def __post_init__(self) -> None:
        t = tuple(int(a) for a in self.twists)
        if not t:
            raise ValueError("a splitting type needs at least one twist")
        if any(a < b for a, b in zip(t, t[1:])):
            raise ValueError(f"twists {t} are not weakly decreasing")
        object.__setattr__(self, "twists", t)

    @property
    def rank(self) -> int:
        return len(self.twists)

    @property
    def degree(self) -> int:
        return sum(self.twists)

    @property
    def gap(self) -> int:
        return self.twists[0] - self.twists[-1]

    def end_dimension(self) -> int:
        return sum(a - b + 1 for a in self.twists for b in self.twists if a >= b)

    def __str__(self) -> str:
        return "+".join(f"O({a})" for a in self.twists)


def splitting_types(r: int, degree: int, gap_cutoff: int) -> list[SplittingType]:
    """All rank-r splitting types of the given degree with a_1 - a_r <= gap_cutoff."""
    if r < 1 or gap_cutoff < 0:
        raise ValueError("need r >= 1 and gap_cutoff >= 0")
    if r == 1:
        return [SplittingType((degree,))]
    out = []
    # a_r <= degree / r <= a_1 <= a_r + gap_cutoff
    for last in range(-(-degree // r) - gap_cutoff, degree // r + 1):
        window = range(last, last + gap_cutoff + 1)
        for head in itertools.combinations_with_replacement(window, r - 1):
            if sum(head) + last == degree:
                out.append(SplittingType(tuple(sorted(head, reverse=True)) + (last,)))
    return sorted(out, reverse=True)


def aut_order_splitting(t: SplittingType, q: int) -> int:
    """|Aut(O(a_1) + ... + O(a_r))| over F_q."""
    out = 1
    for _, group in itertools.groupby(t.twists):
        out *= gl_order(len(list(group)), q)
    exponent = sum(a - b + 1 for a in t.twists for b in t.twists if a > b)
    return out * q**exponent


def count_automorphisms_brute(t: SplittingType, q: int) -> int:
    """Enumerate End(E) as matrices of forms and count invertible ones."""
    require_prime(q)
    a = t.twists
    r = len(a)
    slots = [(i, j) for i in range(r) for j in range(r) if a[i] >= a[j]]
    if q ** t.end_dimension() > ENDOMORPHISM_GUARD:
        raise TooLarge(f"End({t}) has more than {ENDOMORPHISM_GUARD} elements")
    choices = [list(itertools.product(range(q), repeat=a[i] - a[j] + 1)) for i, j in slots]
    count = 0
    for entries in itertools.product(*choices):
        m = [[() for _ in range(r)] for _ in range(r)]
        for (i, j), coeffs in zip(slots, entries):
            cs = list(coeffs)
            while cs and cs[-1] == 0:
                cs.pop()
            m[i][j] = tuple(cs)
        if det_of_forms(m, q):
            count += 1
    return count


def mass_tail_bound(q: int, r: int, degree: int, gap_cutoff: int) -> Fraction:
    """Upper bound on sum 1/|Aut(E)| over splitting types with gap > gap_cutoff."""
    if r == 1:
        return Fraction(0)
    if r == 2:
        # gap g has the parity of the degree and |Aut| = (q-1)^2 q^(g+1)
        first = gap_cutoff + 1
        if (first - degree) % 2:
            first += 1
        return Fraction(1, (q - 1) ** 2 * q ** (first + 1)) / (1 - Fraction(1, q * q))
    if r == 3:
        # gap D: at most D // 3 + 1 types, each with |Aut| >= (q-1)^3 q^(2D+2)
        x = Fraction(1, q * q)
        m = gap_cutoff + 1
        weighted = x**m * (m - (m - 1) * x) / (1 - x) ** 2
        plain = x**m / (1 - x)
        return (weighted + 3 * plain) / 3 / ((q - 1) ** 3 * q**2)
    raise ValueError("tail bounds are implemented for r <= 3")


class MassCensus(NamedTuple):
    partial_sum: Fraction
    tail_bound: Fraction


def p1_mass_census(q: int, r: int, degree: int, gap_cutoff: int) -> MassCensus:
    """Truncated sum of 1/|Aut(E)| over rank-r bundles of the given degree on P^1."""
    if r > 3:
        raise ValueError("the P^1 mass census supports r <= 3")
    partial = sum(
        (Fraction(1, aut_order_splitting(t, q)) for t in splitting_types(r, degree, gap_cutoff)),
        Fraction(0),
    )
    return MassCensus(partial, mass_tail_bound(q, r, degree, gap_cutoff))


def evaluated_algebra(t: SplittingType, points: Sequence[Point], p: int) -> tuple[tuple[int, ...], ...]:
    """RREF basis of End(E) evaluated at the points, each element flattened
    point by point as row-major r x r matrices."""
    a = t.twists
    r = len(a)
    vectors = []
    for i in range(r):
        for j in range(r):
            d = a[i] - a[j]
            for k in range(d + 1):
                v = [0] * (len(points) * r * r)
                for idx, pt in enumerate(points):
                    v[idx * r * r + i * r + j] = monomial_value(pt, k, d, p)
                vectors.append(v)
    return rref_rows(vectors, p)[0]


def algebra_units(basis: Sequence[Sequence[int]], r: int, s: int, p: int) -> list[tuple[tuple[tuple[int, ...], ...], ...]]:
    """Invertible elements of the algebra spanned by ``basis``, as per-point matrices."""
    if p ** len(basis) > ALGEBRA_GUARD:
        raise TooLarge(f"algebra of dimension {len(basis)} over F_{p} is too large")
    size = s * r * r
    units = []
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        v = [0] * size
        for c, b in zip(coeffs, basis):
            if c:
                for idx in range(size):
                    v[idx] += c * b[idx]
        mats = tuple(
            tuple(tuple(v[P * r * r + i * r + j] % p for j in range(r)) for i in range(r))
            for P in range(s)
        )
        if all(det_mod(m, p) for m in mats):
            units.append(mats)
    return units


@dataclass(frozen=True)
class CensusRow:
    bundle: SplittingType
    aut_order: int
    kernel_order: int
    flag_orbits: tuple[tuple[int, int], ...]  # (orbit size, stabilizer order in units(A))
    parab_aut_orders: tuple[int, ...]

    @property
    def contribution(self) -> Fraction:
        return sum((Fraction(1, n) for n in self.parab_aut_orders), Fraction(0))

    def to_json(self) -> dict:
        return {
            "bundle": list(self.bundle.twists),
            "aut_order": str(self.aut_order),
            "kernel_order": str(self.kernel_order),
            "flag_orbits": [[size, str(stab)] for size, stab in self.flag_orbits],
            "parab_aut_orders": [str(n) for n in self.parab_aut_orders],
        }


class ParabolicCensus(NamedTuple):
    partial_sum: Fraction
    tail_bound: Fraction
    rows: tuple[CensusRow, ...]


def _flag_orbits(
    units: Sequence[tuple], flag_types: Sequence[FlagType], p: int
) -> tuple[tuple[int, int], ...]:
    per_point = [enumerate_flags(ft, p) for ft in flag_types]
    index = [{f: n for n, f in enumerate(flags)} for flags in per_point]

    def act(g: tuple, flags: Sequence[Flag], P: int) -> tuple[int, ...]:
        return tuple(
            index[P][tuple(apply_to_subspace(g[P], U, p) for U in f)] for f in flags
        )

    # permutation of each point's flags induced by every group element
    perms = [tuple(act(g, per_point[P], P) for P in range(len(per_point))) for g in units]
    seen: set[tuple[int, ...]] = set()
    orbits = []
    for config in itertools.product(*(range(len(f)) for f in per_point)):
        if config in seen:
            continue
        orbit = set()
        stabilizer = 0
        for perm in perms:
            image = tuple(perm[P][c] for P, c in enumerate(config))
            orbit.add(image)
            stabilizer += image == config
        if len(orbit) * stabilizer != len(units):
            raise OracleMismatch("orbit-stabilizer count failed")
        seen |= orbit
        orbits.append((len(orbit), stabilizer))
    return tuple(orbits)


def census_row(
    t: SplittingType,
    data: QuasiParabolicData,
    points: Sequence[Point],
    q: int,
    cache: dict | None = None,
) -> CensusRow:
    aut = aut_order_splitting(t, q)
    r, s = t.rank, len(points)
    if s == 0:
        return CensusRow(t, aut, 1, ((1, aut),), (aut,))
    basis = evaluated_algebra(t, points, q)
    kernel = q ** (t.end_dimension() - len(basis))
    key = (basis, data.flag_types)
    if cache is not None and key in cache:
        units_order, orbits = cache[key]
    else:
        units = algebra_units(basis, r, s, q)
        units_order = len(units)
        orbits = _flag_orbits(units, data.flag_types, q)
        if cache is not None:
            cache[key] = (units_order, orbits)
    if units_order * kernel != aut:
        raise OracleMismatch(
            f"|units(A)| * kernel = {units_order * kernel} but |Aut({t})| = {aut}"
        )
    return CensusRow(t, aut, kernel, orbits, tuple(stab * kernel for _, stab in orbits))


def p1_parabolic_census(
    q: int,
    data: QuasiParabolicData,
    marked_points: Sequence[Point],
    degree: int,
    gap_cutoff: int,
) -> ParabolicCensus:
    """Truncated sum of 1/|ParAut| over quasi-parabolic bundles on P^1."""
    require_prime(q)
    if len(marked_points) != data.marked_count:
        raise ValueError(
            f"{len(marked_points)} marked points for {data.marked_count} flag types"
        )
    if len(set(marked_points)) != len(marked_points):
        raise ValueError("marked points must be distinct")
    data.check_ranks()
    r = data.rank
    if r > 3:
        raise ValueError("the P^1 parabolic census supports r <= 3")
    cache: dict = {}
    rows = tuple(
        census_row(t, data, marked_points, q, cache)
        for t in splitting_types(r, degree, gap_cutoff)
    )
    partial = sum((row.contribution for row in rows), Fraction(0))
    f = 1
    for flags in (enumerate_flags(ft, q) for ft in data.flag_types):
        f *= len(flags)
    return ParabolicCensus(partial, f * mass_tail_bound(q, r, degree, gap_cutoff), rows)
