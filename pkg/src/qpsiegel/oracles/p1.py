"""Points of P^1(F_p), binary forms and small polynomial helpers over F_p.

Polynomials are tuples of residues, lowest degree first, with no trailing
zeros.  A section of O(d) on P^1 is a binary form of degree d, stored as its
d + 1 coefficients (coefficient k multiplies X^k Y^(d-k)).
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator, Sequence

from ..finite_field import require_prime

Point = tuple[int, int]  # homogeneous (X, Y); affine a is (a, 1), infinity is (1, 0)
INFINITY: Point = (1, 0)
Poly = tuple[int, ...]


def parse_point(token: str | int, q: int) -> Point:
    if isinstance(token, str):
        t = token.strip().lower()
        if t in ("inf", "infinity", "∞"):
            return INFINITY
        token = int(t)
    if not 0 <= token < q:
        raise ValueError(f"affine coordinate {token} is not a residue mod {q}")
    return (token, 1)


def parse_points(tokens: Iterable[str | int], q: int) -> tuple[Point, ...]:
    require_prime(q)
    points = tuple(parse_point(t, q) for t in tokens)
    if len(set(points)) != len(points):
        raise ValueError("marked points must be distinct")
    return points


def format_point(pt: Point) -> str:
    return "inf" if pt == INFINITY else str(pt[0])


def monomial_value(pt: Point, k: int, d: int, p: int) -> int:
    """X^k Y^(d-k) evaluated at the point's fixed representative."""
    x, y = pt
    return pow(x, k, p) * pow(y, d - k, p) % p


def form_value(coeffs: Sequence[int], pt: Point, p: int) -> int:
    d = len(coeffs) - 1
    return sum(c * monomial_value(pt, k, d, p) for k, c in enumerate(coeffs)) % p


def trim(coeffs: Iterable[int], p: int) -> Poly:
    cs = [c % p for c in coeffs]
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return trim(out, p)


def poly_add(a: Sequence[int], b: Sequence[int], p: int) -> Poly:
    n = max(len(a), len(b))
    return trim(
        ((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)), p
    )


def poly_eval(a: Sequence[int], x: int, p: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    return acc


def polys_below_degree(e: int, p: int) -> list[Poly]:
    """Every polynomial of degree < e (the residues modulo a degree-e modulus)."""
    return [trim(c, p) for c in itertools.product(range(p), repeat=e)]


def monic_polys(e: int, p: int) -> Iterator[Poly]:
    for low in itertools.product(range(p), repeat=e):
        yield tuple(low) + (1,)


def det_of_forms(matrix: Sequence[Sequence[Sequence[int]]], p: int) -> Poly:
    """Determinant of a square matrix of (dehomogenized) polynomials."""
    n = len(matrix)
    total: Poly = ()
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term: Poly = (sign % p,)
        for i in range(n):
            term = poly_mul(term, matrix[i][perm[i]], p)
            if not term:
                break
        total = poly_add(total, term, p)
    return total
