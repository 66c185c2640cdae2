"""Prime-field arithmetic and small dense linear algebra over F_p.

Matrices are stored as tuples of row tuples of residues.  Subspaces are
represented by the reduced row echelon form of a basis, which doubles as
their canonical key.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import TooLarge

# Enumerations never visit more than this many vectors of the ambient space.
VECTOR_GUARD = 2**20

Rows = tuple[tuple[int, ...], ...]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def require_prime(q: int) -> None:
    if not is_prime(q):
        raise ValueError(f"enumeration oracles need a prime q, got {q}")


@dataclass(frozen=True)
class FieldElement:
    residue: int
    modulus: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "residue", self.residue % self.modulus)

    def _coerce(self, other: FieldElement | int) -> int:
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                raise ValueError("field elements over different moduli")
            return other.residue
        return other % self.modulus

    def __add__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.residue + self._coerce(other), self.modulus)

    def __sub__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.residue - self._coerce(other), self.modulus)

    def __mul__(self, other: FieldElement | int) -> FieldElement:
        return FieldElement(self.residue * self._coerce(other), self.modulus)

    __radd__ = __add__
    __rmul__ = __mul__

    def __neg__(self) -> FieldElement:
        return FieldElement(-self.residue, self.modulus)

    def inverse(self) -> FieldElement:
        if self.residue == 0:
            raise ZeroDivisionError("0 has no inverse")
        return FieldElement(pow(self.residue, -1, self.modulus), self.modulus)

    def __truediv__(self, other: FieldElement | int) -> FieldElement:
        return self * FieldElement(self._coerce(other), self.modulus).inverse()

    def __bool__(self) -> bool:
        return self.residue != 0


@dataclass(frozen=True)
class Matrix:
    entries: Rows
    modulus: int
    cols: int = -1

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) % self.modulus for x in row) for row in self.entries)
        cols = len(rows[0]) if rows else max(self.cols, 0)
        if any(len(row) != cols for row in rows):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "cols", cols)

    @property
    def rows(self) -> int:
        return len(self.entries)

    @classmethod
    def identity(cls, n: int, p: int) -> Matrix:
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), p)

    def __matmul__(self, other: Matrix) -> Matrix:
        return Matrix(mat_mul(self.entries, other.entries, self.modulus), self.modulus, other.cols)


def mat_mul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], p: int) -> Rows:
    bt = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) % p for col in bt) for row in a)


def rref_rows(rows: Iterable[Sequence[int]], p: int) -> tuple[Rows, tuple[int, ...]]:
    """Reduced row echelon form with zero rows dropped, plus pivot columns."""
    m = [list(r) for r in rows]
    if not m:
        return (), ()
    ncols = len(m[0])
    pivots: list[int] = []
    top = 0
    for col in range(ncols):
        pivot = next((i for i in range(top, len(m)) if m[i][col] % p), None)
        if pivot is None:
            continue
        m[top], m[pivot] = m[pivot], m[top]
        inv = pow(m[top][col], -1, p)
        m[top] = [(x * inv) % p for x in m[top]]
        for i in range(len(m)):
            if i != top and m[i][col] % p:
                f = m[i][col]
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[top])]
        pivots.append(col)
        top += 1
        if top == len(m):
            break
    return tuple(tuple(r) for r in m[:top]), tuple(pivots)


def rref(m: Matrix) -> Matrix:
    rows, _ = rref_rows(m.entries, m.modulus)
    return Matrix(rows, m.modulus, m.cols)


def mat_rank(m: Matrix) -> int:
    return len(rref_rows(m.entries, m.modulus)[1])


def rank_rows(rows: Iterable[Sequence[int]], p: int) -> int:
    return len(rref_rows(rows, p)[1])


def det_mod(rows: Sequence[Sequence[int]], p: int) -> int:
    """Determinant of a square matrix over F_p by elimination."""
    m = [list(r) for r in rows]
    n = len(m)
    det = 1
    for col in range(n):
        pivot = next((i for i in range(col, n) if m[i][col] % p), None)
        if pivot is None:
            return 0
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det = det * m[col][col] % p
        inv = pow(m[col][col], -1, p)
        for i in range(col + 1, n):
            f = m[i][col] * inv % p
            if f:
                m[i] = [(x - f * y) % p for x, y in zip(m[i], m[col])]
    return det % p


def gl_order(r: int, q: int) -> int:
    """|GL_r(F_q)| = prod_{i<r} (q^r - q^i)."""
    if r < 0 or q < 2:
        raise ValueError("need r >= 0 and q >= 2")
    out = 1
    for i in range(r):
        out *= q**r - q**i
    return out


def all_vectors(q: int, dim: int) -> Iterable[tuple[int, ...]]:
    if q**dim > VECTOR_GUARD:
        raise TooLarge(f"F_{q}^{dim} has more than {VECTOR_GUARD} vectors")
    return itertools.product(range(q), repeat=dim)


def enumerate_subspaces(q: int, ambient_dim: int, dim: int) -> list[Rows]:
    """All dim-dimensional subspaces of F_q^ambient_dim as RREF bases.

    Generated by pivot pattern: choose pivot columns, then fill every entry
    that RREF leaves free.  Sorted, so the output order is deterministic.
    """
    require_prime(q)
    if not 0 <= dim <= ambient_dim:
        raise ValueError(f"need 0 <= dim <= ambient_dim, got {dim}, {ambient_dim}")
    if q**ambient_dim > VECTOR_GUARD:
        raise TooLarge(f"F_{q}^{ambient_dim} has more than {VECTOR_GUARD} vectors")
    out: list[Rows] = []
    for pivots in itertools.combinations(range(ambient_dim), dim):
        free = [
            (i, c)
            for i, pc in enumerate(pivots)
            for c in range(pc + 1, ambient_dim)
            if c not in pivots
        ]
        for values in itertools.product(range(q), repeat=len(free)):
            m = [[0] * ambient_dim for _ in range(dim)]
            for i, pc in enumerate(pivots):
                m[i][pc] = 1
            for (i, c), v in zip(free, values):
                m[i][c] = v
            out.append(tuple(tuple(row) for row in m))
    out.sort()
    return out


def span_key(rows: Iterable[Sequence[int]], p: int) -> Rows:
    """Canonical key of the span of ``rows``."""
    return rref_rows(rows, p)[0]


def contains(big: Rows, small: Rows, p: int) -> bool:
    return rank_rows(big + small, p) == len(big)


def apply_to_subspace(g: Sequence[Sequence[int]], basis: Rows, p: int) -> Rows:
    """Image g(U) of the subspace with row basis ``basis`` (vectors as columns)."""
    image = [
        tuple(sum(g[i][k] * v[k] for k in range(len(v))) % p for i in range(len(g)))
        for v in basis
    ]
    return rref_rows(image, p)[0]
