"""Quasi-parabolic data and point counts of flag varieties over F_q."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Mapping, Sequence

from .curve_zeta import CurveData
from .errors import IntegralityError, PointCountMismatch, RankMismatch
from .finite_field import Rows, contains, enumerate_subspaces

# A flag is the descending chain F_1 = k^r > F_2 > ... > F_p, each an RREF basis.
Flag = tuple[Rows, ...]


@dataclass(frozen=True)
class FlagType:
    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(int(x) for x in self.parts))
        if not self.parts or any(x < 1 for x in self.parts):
            raise ValueError(f"flag type parts must be positive, got {self.parts}")

    @property
    def rank(self) -> int:
        return sum(self.parts)

    @property
    def is_trivial(self) -> bool:
        return len(self.parts) == 1

    def dims(self) -> tuple[int, ...]:
        """Dimensions of F_1, ..., F_p (descending)."""
        return tuple(sum(self.parts[j:]) for j in range(len(self.parts)))


@dataclass(frozen=True)
class QuasiParabolicData:
    rank: int
    flag_types: tuple[FlagType, ...] = ()

    def __post_init__(self) -> None:
        if self.rank < 1:
            raise RankMismatch(f"rank must be at least 1, got {self.rank}")
        types = tuple(t if isinstance(t, FlagType) else FlagType(tuple(t)) for t in self.flag_types)
        object.__setattr__(self, "flag_types", types)

    @property
    def marked_count(self) -> int:
        return len(self.flag_types)

    @classmethod
    def trivial(cls, rank: int, s: int) -> QuasiParabolicData:
        return cls(rank, tuple(FlagType((rank,)) for _ in range(s)))

    @classmethod
    def full(cls, rank: int, s: int) -> QuasiParabolicData:
        return cls(rank, tuple(FlagType((1,) * rank) for _ in range(s)))

    @classmethod
    def from_json(cls, doc: Mapping[str, Any]) -> QuasiParabolicData:
        return cls(int(doc["rank"]), tuple(FlagType(tuple(t)) for t in doc["flags"]))

    def to_json(self) -> dict[str, Any]:
        return {"rank": self.rank, "flags": [list(t.parts) for t in self.flag_types]}

    def check_ranks(self) -> None:
        for i, t in enumerate(self.flag_types):
            if t.rank != self.rank:
                raise RankMismatch(
                    f"flag type {list(t.parts)} at point {i} sums to {t.rank}, not {self.rank}"
                )


def validate_parabolic(data: QuasiParabolicData, curve: CurveData) -> None:
    if data.marked_count != curve.marked_count:
        raise PointCountMismatch(
            f"{data.marked_count} flag types for {curve.marked_count} marked points"
        )
    data.check_ranks()


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    value = Fraction(1)
    for i in range(1, k + 1):
        value *= Fraction(q ** (n - k + i) - 1, q**i - 1)
    if value.denominator != 1:
        raise IntegralityError(f"[{n} choose {k}]_{q} = {value} is not an integer")
    return value.numerator


def single_flag_count(flag_type: FlagType, q: int) -> int:
    # choose F_2 in F_1, F_3 in F_2, ... : one Gaussian binomial per step
    dims = flag_type.dims() + (0,)
    out = 1
    for big, small in zip(dims, dims[1:]):
        out *= gaussian_binomial(big, small, q)
    return out


def flag_count(data: QuasiParabolicData, q: int) -> int:
    """f(q, r_ij): F_q-points of the product of the flag varieties."""
    if q < 2:
        raise ValueError("q must be at least 2")
    data.check_ranks()
    out = 1
    for t in data.flag_types:
        out *= single_flag_count(t, q)
    return out


def enumerate_flags(flag_type: FlagType, q: int) -> list[Flag]:
    """Every flag of the given type in F_q^r, in deterministic order."""
    r = flag_type.rank
    dims = flag_type.dims()
    layers = {d: enumerate_subspaces(q, r, d) for d in set(dims)}
    flags: list[Flag] = []

    def extend(chain: tuple[Rows, ...], depth: int) -> None:
        if depth == len(dims):
            flags.append(chain)
            return
        for sub in layers[dims[depth]]:
            if not chain or contains(chain[-1], sub, q):
                extend(chain + (sub,), depth + 1)

    extend((), 0)
    return flags
