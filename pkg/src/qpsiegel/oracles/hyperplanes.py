"""Points of P(V) off the coordinate hyperplanes of a surjection V -> k^s."""

from __future__ import annotations

import random
from typing import Sequence

from ..errors import OracleMismatch
from ..finite_field import all_vectors, rank_rows, require_prime


def projective_points(q: int, d: int) -> list[tuple[int, ...]]:
    """Representatives of P^(d-1)(F_q): first nonzero coordinate equal to 1."""
    pts = []
    for v in all_vectors(q, d):
        lead = next((x for x in v if x), 0)
        if lead == 1:
            pts.append(v)
    return pts


def hyperplane_complement_count(q: int, phi: Sequence[Sequence[int]]) -> int:
    """#{v in P(V): (phi v)_i != 0 for every i}, for an s x d matrix phi."""
    d = len(phi[0])
    return sum(
        1
        for v in projective_points(q, d)
        if all(sum(a * x for a, x in zip(row, v)) % q for row in phi)
    )


def random_surjection(q: int, d: int, s: int, rng: random.Random) -> tuple[tuple[int, ...], ...]:
    while True:
        phi = tuple(tuple(rng.randrange(q) for _ in range(d)) for _ in range(s))
        if rank_rows(phi, q) == s:
            return phi


def hyperplane_avoid_count(q: int, d: int, s: int, trials: int = 10, seed: int = 0) -> int:
    """Brute-force count for the coordinate surjection, checked against random ones.

    Raises OracleMismatch if any random surjection gives a different count or
    if the count differs from q^(d-s) (q-1)^(s-1).
    """
    require_prime(q)
    if not 1 <= s <= d:
        raise ValueError(f"need 1 <= s <= d, got s={s}, d={d}")
    base = tuple(tuple(int(i == j) for j in range(d)) for i in range(s))
    count = hyperplane_complement_count(q, base)
    rng = random.Random(seed)
    for _ in range(trials):
        phi = random_surjection(q, d, s, rng)
        other = hyperplane_complement_count(q, phi)
        if other != count:
            raise OracleMismatch(f"surjection {phi} gives {other}, coordinate one gives {count}")
    expected = q ** (d - s) * (q - 1) ** (s - 1)
    if count != expected:
        raise OracleMismatch(f"count {count} differs from q^(d-s)(q-1)^(s-1) = {expected}")
    return count
