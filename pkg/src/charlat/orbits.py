"""Exponent tuples, canonical types and automorphism classes of abelian p-groups.

For ``G = Z_{p^l1} x ... x Z_{p^ln}`` an element's *type* is the tuple ``a``
with ``|g_i| = p^{a_i}``. Types are plain tuples of ints; every function takes
the exponent tuple ``lam`` of the ambient group explicitly. Coordinates
reported to callers (violations, degeneracy profiles) are 1-based, and the
sentinels ``a_0 = lam_0 = 0`` are implied.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

__all__ = [
    "TupleError",
    "DegeneracyProfile",
    "check_tuple",
    "tuple_leq",
    "tuple_meet",
    "tuple_join",
    "lattice_points",
    "canonical_violation",
    "is_canonical",
    "canonicalize",
    "iter_canonical",
    "enumerate_canonical",
    "count_orbits",
    "degeneracy",
    "orbit_types",
    "type_size",
    "orbit_size",
    "orbit_partition",
]

Tuple = tuple[int, ...]


class TupleError(ValueError):
    """Tuple outside the lattice of exponent tuples, or hypotheses not met."""


def check_tuple(a: Sequence[int], lam: Sequence[int]) -> Tuple:
    a = tuple(a)
    if len(a) != len(lam):
        raise TupleError(f"tuple {a} has length {len(a)}, expected {len(lam)}")
    if any(x < 0 or x > l for x, l in zip(a, lam)):
        raise TupleError(f"tuple {a} is not between 0 and {tuple(lam)}")
    return a


def _same_length(a, b):
    if len(a) != len(b):
        raise TupleError(f"length mismatch: {tuple(a)} vs {tuple(b)}")


def tuple_leq(a: Sequence[int], b: Sequence[int]) -> bool:
    _same_length(a, b)
    return all(x <= y for x, y in zip(a, b))


def tuple_meet(a: Sequence[int], b: Sequence[int]) -> Tuple:
    _same_length(a, b)
    return tuple(map(min, a, b))


def tuple_join(a: Sequence[int], b: Sequence[int]) -> Tuple:
    _same_length(a, b)
    return tuple(map(max, a, b))


def lattice_points(lam: Sequence[int]) -> Iterator[Tuple]:
    """All tuples ``0 <= a <= lam`` in lexicographic order."""
    return itertools.product(*(range(l + 1) for l in lam))


def canonical_violation(a: Sequence[int], lam: Sequence[int]) -> tuple[int, str] | None:
    """First coordinate (1-based) where ``a`` fails to be canonical, with kind ``"I"`` or ``"II"``.

    Kind I at i: ``a_i < a_{i-1}``. Kind II at i: ``a_{i+1} - a_i > lam_{i+1} - lam_i``.
    Returns None when ``a`` is canonical.
    """
    n = len(a)
    for i in range(n):
        if i > 0 and a[i] < a[i - 1]:
            return i + 1, "I"
        if i + 1 < n and a[i + 1] - a[i] > lam[i + 1] - lam[i]:
            return i + 1, "II"
    return None


def is_canonical(a: Sequence[int], lam: Sequence[int]) -> bool:
    return canonical_violation(a, lam) is None


def canonicalize(a: Sequence[int], lam: Sequence[int]) -> Tuple:
    """The unique canonical tuple automorphic to ``a``.

    Bumps the smallest noncanonical coordinate by one until none is left. Each
    bump stays inside the type's automorphism class and strictly increases the
    tuple, so the loop ends at the class maximum.
    """
    cur = list(check_tuple(a, lam))
    while (v := canonical_violation(cur, lam)) is not None:
        cur[v[0] - 1] += 1
    return tuple(cur)


def iter_canonical(lam: Sequence[int]) -> Iterator[Tuple]:
    """Canonical tuples in lexicographic order, generated coordinate by coordinate."""
    n = len(lam)
    lam0 = (0, *lam)
    cur = [0] * n

    def rec(i: int, prev: int):
        if i == n:
            yield tuple(cur)
            return
        for x in range(prev, prev + lam0[i + 1] - lam0[i] + 1):
            cur[i] = x
            yield from rec(i + 1, x)

    return rec(0, 0)


def enumerate_canonical(lam: Sequence[int]) -> list[Tuple]:
    return list(iter_canonical(lam))


def count_orbits(lam: Sequence[int]) -> int:
    """Number of automorphism classes, the identity class included."""
    lam0 = (0, *lam)
    return math.prod(lam0[i] - lam0[i - 1] + 1 for i in range(1, len(lam0)))


@dataclass(frozen=True)
class DegeneracyProfile:
    """Degenerate coordinates of a canonical tuple, 1-based.

    A coordinate may be degenerate of both kinds at once.
    """

    degenerate_I: frozenset[int]
    degenerate_II: frozenset[int]
    nondegenerate: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.nondegenerate)

    @property
    def degenerate(self) -> frozenset[int]:
        return self.degenerate_I | self.degenerate_II


def degeneracy(a: Sequence[int], lam: Sequence[int]) -> DegeneracyProfile:
    """Classify the coordinates of canonical ``a``.

    Kind I at i: ``a_i == a_{i-1}``; kind II at i < n: ``a_{i+1} - a_i == lam_{i+1} - lam_i``.
    Kind II is never satisfied at the last coordinate.
    """
    a = check_tuple(a, lam)
    if not is_canonical(a, lam):
        raise TupleError(f"{a} is not canonical for {tuple(lam)}")
    n = len(a)
    a0 = (0, *a)
    kind1 = {i for i in range(1, n + 1) if a0[i] == a0[i - 1]}
    kind2 = {i for i in range(1, n) if a[i] - a[i - 1] == lam[i] - lam[i - 1]}
    nondeg = tuple(i for i in range(1, n + 1) if i not in kind1 and i not in kind2)
    return DegeneracyProfile(frozenset(kind1), frozenset(kind2), nondeg)


def _require_reduced(lam):
    if any(x >= y for x, y in zip(lam, lam[1:])):
        raise TupleError(f"exponents {tuple(lam)} have repeats; orbit splitting needs distinct exponents")


def orbit_types(a: Sequence[int], lam: Sequence[int]) -> set[Tuple]:
    """Types making up the automorphism class of canonical ``a`` (distinct exponents only).

    These are the ``b <= a`` agreeing with ``a`` on every nondegenerate coordinate.
    """
    _require_reduced(lam)
    prof = degeneracy(a, lam)
    fixed = {i - 1 for i in prof.nondegenerate}
    ranges = [(x,) if i in fixed else range(x + 1) for i, x in enumerate(a)]
    return set(itertools.product(*ranges))


def type_size(b: Sequence[int], p: int) -> int:
    """Number of elements of type ``b``: ``p^k - p^(k-1)`` choices per coordinate with ``b_i = k >= 1``."""
    return math.prod(p**k - p ** (k - 1) if k else 1 for k in b)


def orbit_size(a: Sequence[int], lam: Sequence[int], p: int) -> int:
    return sum(type_size(b, p) for b in orbit_types(a, lam))


def orbit_partition(lam: Sequence[int]) -> dict[Tuple, set[Tuple]]:
    """Group every type by its canonical representative; valid for any ``lam``."""
    out: dict[Tuple, set[Tuple]] = {}
    for b in lattice_points(lam):
        out.setdefault(canonicalize(b, lam), set()).add(b)
    return out
