"""Subspaces of GF(2)^k with vectors stored as int bitsets.

Coordinate ``t`` (0-based) of a vector is bit ``t``. A subspace is kept as its
reduced row echelon basis: each row's pivot is its lowest set bit, pivots
strictly increase down the basis, and every pivot column is clear in all
other rows. That basis is unique, so it doubles as the subspace's identity.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "GF2Subspace",
    "rref",
    "span",
    "iter_subspaces",
    "iter_projection_surjective",
]


def _low_bit(v: int) -> int:
    return (v & -v).bit_length() - 1


def rref(vectors: Iterable[int]) -> tuple[int, ...]:
    """Reduced row echelon basis of the span of ``vectors``."""
    rows: list[int] = []
    for v in vectors:
        for r in rows:
            if v >> _low_bit(r) & 1:
                v ^= r
        if v:
            piv = 1 << _low_bit(v)
            rows = [r ^ v if r & piv else r for r in rows]
            rows.append(v)
    return tuple(sorted(rows, key=_low_bit))


def span(basis: Iterable[int]) -> set[int]:
    out = {0}
    for b in basis:
        out |= {x ^ b for x in out}
    return out


@dataclass(frozen=True, order=True)
class GF2Subspace:
    ambient_dim: int
    basis: tuple[int, ...]

    @classmethod
    def spanned_by(cls, k: int, vectors: Iterable[int]) -> GF2Subspace:
        return cls(k, rref(vectors))

    @classmethod
    def full(cls, k: int) -> GF2Subspace:
        return cls(k, tuple(1 << t for t in range(k)))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def elements(self) -> set[int]:
        return span(self.basis)

    def __contains__(self, v: int) -> bool:
        for r in self.basis:
            if v >> _low_bit(r) & 1:
                v ^= r
        return v == 0

    def is_projection_surjective(self) -> bool:
        acc = 0
        for r in self.basis:
            acc |= r
        return acc == (1 << self.ambient_dim) - 1

    def vectors(self) -> list[tuple[int, ...]]:
        """Basis rows as 0/1 tuples in coordinate order."""
        return [tuple(r >> t & 1 for t in range(self.ambient_dim)) for r in self.basis]


def iter_subspaces(k: int, dim: int | None = None) -> Iterator[GF2Subspace]:
    """Every subspace of GF(2)^k exactly once, ordered by dimension then pivots.

    Echelon forms are generated directly: choose the pivot columns, then fill
    the non-pivot columns to the right of each pivot freely.
    """
    dims = range(k + 1) if dim is None else (dim,)
    for d in dims:
        for pivots in itertools.combinations(range(k), d):
            pset = set(pivots)
            free = [[c for c in range(p + 1, k) if c not in pset] for p in pivots]
            slots = [(row, c) for row, cols in enumerate(free) for c in cols]
            for bits in itertools.product((0, 1), repeat=len(slots)):
                rows = [1 << p for p in pivots]
                for (row, c), bit in zip(slots, bits):
                    if bit:
                        rows[row] |= 1 << c
                yield GF2Subspace(k, tuple(rows))


def iter_projection_surjective(k: int) -> Iterator[GF2Subspace]:
    """Subspaces of GF(2)^k whose projection onto every coordinate is onto."""
    return (s for s in iter_subspaces(k) if s.is_projection_surjective())
