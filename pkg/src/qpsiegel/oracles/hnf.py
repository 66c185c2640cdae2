"""Hermite normal form censuses of effective r-divisors.

An effective r-divisor of degree n on the affine line is a lattice
D > F_q[x]^r with D / F_q[x]^r of length n.  Dualizing gives a sublattice of
F_q[x]^r of the same colength, which has a unique row-style Hermite normal
form: upper triangular, monic diagonal d_1..d_r, and every entry above the
diagonal in column j reduced modulo d_j.  The censuses below enumerate those
matrices one by one; the point at infinity is handled separately by the
local census at a single rational point.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from ..errors import TooLarge
from ..finite_field import contains, enumerate_subspaces, require_prime
from .p1 import INFINITY, Point, Poly, monic_polys, poly_eval, polys_below_degree

# Upper bound on the number of HNF matrices a single census may visit.
HNF_GUARD = 4_000_000


@dataclass(frozen=True)
class HnfMatrix:
    q: int
    entries: tuple[tuple[Poly, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def diagonal(self) -> tuple[Poly, ...]:
        return tuple(self.entries[i][i] for i in range(self.rank))

    @property
    def colength(self) -> int:
        return sum(len(d) - 1 for d in self.diagonal)

    def is_valid(self) -> bool:
        r = self.rank
        for i in range(r):
            if len(self.entries[i]) != r:
                return False
            d = self.entries[i][i]
            if not d or d[-1] != 1:
                return False
            for j in range(r):
                e = self.entries[i][j]
                if j < i and e:
                    return False
                if j > i and len(e) >= len(self.entries[j][j]):
                    return False
        return True


def _compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    for cuts in itertools.combinations(range(n + parts - 1), parts - 1):
        prev = -1
        out = []
        for c in cuts:
            out.append(c - prev - 1)
            prev = c
        out.append(n + parts - 2 - prev)
        yield tuple(out)


def _offdiagonal_choices(q: int, diagonal: Sequence[Poly]) -> list[list[Poly]]:
    r = len(diagonal)
    return [
        polys_below_degree(len(diagonal[j]) - 1, q) for j in range(r) for _ in range(j)
    ]


def _assemble(q: int, diagonal: Sequence[Poly], off: Sequence[Poly]) -> HnfMatrix:
    r = len(diagonal)
    rows = [[()] * r for _ in range(r)]
    it = iter(off)
    for j in range(r):
        rows[j][j] = diagonal[j]
        for i in range(j):
            rows[i][j] = next(it)
    return HnfMatrix(q, tuple(tuple(row) for row in rows))


def _census_size(q: int, degrees: Sequence[int]) -> int:
    return q ** sum(j * e for j, e in enumerate(degrees))


def _count_with_diagonal(q: int, diagonal: Sequence[Poly]) -> int:
    return sum(1 for _ in itertools.product(*_offdiagonal_choices(q, diagonal)))


def iter_local_hnf(q: int, r: int, n: int) -> Iterator[HnfMatrix]:
    """HNF matrices with diagonal (x^e_1, ..., x^e_r), sum e_i = n."""
    require_prime(q)
    for degrees in _compositions(n, r):
        diagonal = [(0,) * e + (1,) for e in degrees]
        for off in itertools.product(*_offdiagonal_choices(q, diagonal)):
            yield _assemble(q, diagonal, off)


def local_sublattice_count(q: int, r: int, n: int) -> int:
    """Number of colength-n sublattices of F_q[[x]]^r, by enumeration."""
    require_prime(q)
    if r < 1 or n < 0:
        raise ValueError("need r >= 1 and n >= 0")
    compositions = list(_compositions(n, r))
    if sum(_census_size(q, e) for e in compositions) > HNF_GUARD:
        raise TooLarge(f"local census q={q}, r={r}, n={n} exceeds {HNF_GUARD} matrices")
    total = 0
    for degrees in compositions:
        total += _count_with_diagonal(q, [(0,) * e + (1,) for e in degrees])
    return total


def local_sublattice_count_by_submodules(q: int, r: int, n: int) -> int:
    """Same count, as x-stable subspaces of codimension n in (F_q[x]/x^n)^r.

    Independent of the HNF parametrization; feasible only for tiny q^(rn).
    """
    dim = r * n
    if dim == 0:
        return 1
    total = 0
    for sub in enumerate_subspaces(q, dim, dim - n):
        shifted = []
        for v in sub:
            w = [0] * dim
            for i in range(r):
                for k in range(n - 1):
                    w[i * n + k + 1] = v[i * n + k]
            shifted.append(tuple(w))
        if all(contains(sub, (w,), q) for w in shifted):
            total += 1
    return total


def _affine_diagonals(q: int, r: int, n: int, avoid: Sequence[int]) -> Iterator[tuple[Poly, ...]]:
    for degrees in _compositions(n, r):
        per_slot = [
            [d for d in monic_polys(e, q) if all(poly_eval(d, a, q) for a in avoid)]
            for e in degrees
        ]
        yield from itertools.product(*per_slot)


def iter_affine_hnf(q: int, r: int, n: int, avoid: Sequence[int] = ()) -> Iterator[HnfMatrix]:
    require_prime(q)
    for diagonal in _affine_diagonals(q, r, n, avoid):
        for off in itertools.product(*_offdiagonal_choices(q, diagonal)):
            yield _assemble(q, diagonal, off)


def p1_divisor_count(q: int, r: int, n: int, avoid: Sequence[int] = ()) -> int:
    """Effective r-divisors of degree n on A^1 minus ``avoid``, by HNF census.

    Infinity is always excluded, so this matches Z_{X-S} with s = 1 + |avoid|.
    """
    require_prime(q)
    if r < 1 or n < 0:
        raise ValueError("need r >= 1 and n >= 0")
    avoid = [a % q for a in avoid]
    if len(set(avoid)) != len(avoid):
        raise ValueError("avoided points must be distinct")
    bound = sum(_census_size(q, e) * q**n for e in _compositions(n, r))
    if bound > HNF_GUARD:
        raise TooLarge(f"affine census q={q}, r={r}, n={n} exceeds {HNF_GUARD} matrices")
    total = 0
    for diagonal in _affine_diagonals(q, r, n, avoid):
        total += _count_with_diagonal(q, diagonal)
    return total


def p1_effective_divisor_count(q: int, r: int, n: int, marked: Sequence[Point]) -> int:
    """Effective r-divisors of degree n on P^1 with support off ``marked``.

    Splits a divisor into its affine part and its part at infinity when
    infinity is not marked.
    """
    affine = [pt[0] for pt in marked if pt != INFINITY]
    if INFINITY in marked:
        return p1_divisor_count(q, r, n, affine)
    return sum(
        p1_divisor_count(q, r, n - k, affine) * local_sublattice_count(q, r, k)
        for k in range(n + 1)
    )
