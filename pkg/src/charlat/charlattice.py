"""Characteristic subgroups of finite abelian p-groups.

Every characteristic subgroup ``H`` has a *profile* ``m``: the componentwise
maximum of the types it contains, always a canonical tuple. For odd p the
only subgroup with profile ``m`` is the regular subgroup ``R(m)`` (all types
``b <= m``). For p = 2 the subgroups with profile ``m`` sit between
``R(m')``, ``m'_i = max(m_i - 1, 0)``, and ``R(m)``, and correspond one-to-one
to the projection-surjective subspaces ``K`` of ``GF(2)^r``, ``r`` being the
number of nondegenerate coordinates of ``m``.

A :class:`CharSubgroup` stores ``(lam, m, K)`` and derives its type set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache

import numpy as np

from .gf2 import GF2Subspace, iter_projection_surjective
from .latticecore import CapExceeded, FiniteLattice
from .orbits import (
    check_tuple,
    count_orbits,
    degeneracy,
    is_canonical,
    iter_canonical,
    lattice_points,
    tuple_leq,
    type_size,
)
from .signature import PGroupSignature, SignatureError

__all__ = [
    "CharSubgroup",
    "regular_order",
    "regular_subgroup",
    "canonical_lattice",
    "char_lattice_odd",
    "char_lattice",
    "gaussian_binomial_2",
    "count_projection_surjective",
    "enumerate_projection_surjective",
    "char_subgroups_below",
    "expand_to_types",
    "char_lattice_2",
    "count_char_subgroups",
    "count_char_subgroups_by_enumeration",
    "unique_atom",
    "MAX_TUPLES",
    "MAX_ELEMENTS",
    "SUBSPACE_CAP",
]

MAX_TUPLES = 2**20
MAX_ELEMENTS = 5000
SUBSPACE_CAP = 12

Tuple = tuple[int, ...]


def _fmt(t: Tuple) -> str:
    return "(" + ",".join(map(str, t)) + ")"


@dataclass(frozen=True)
class CharSubgroup:
    """Characteristic subgroup with profile ``profile`` and subspace ``subspace``.

    ``subspace`` lives on the nondegenerate coordinates of the profile, in
    increasing order; bit ``t`` stands for the ``t``-th such coordinate.
    """

    lam: Tuple
    profile: Tuple
    subspace: GF2Subspace

    def __post_init__(self):
        if not is_canonical(self.profile, self.lam):
            raise ValueError(f"profile {self.profile} is not canonical for {self.lam}")
        if self.subspace.ambient_dim != len(self.nondegenerate):
            raise ValueError("subspace dimension does not match the nondegenerate coordinates")
        if not self.subspace.is_projection_surjective():
            raise ValueError("subspace is not projection-surjective")

    @cached_property
    def nondegenerate(self) -> tuple[int, ...]:
        """Nondegenerate coordinates of the profile, 1-based."""
        return degeneracy(self.profile, self.lam).nondegenerate

    @property
    def r(self) -> int:
        return len(self.nondegenerate)

    @property
    def kernel_profile(self) -> Tuple:
        return tuple(max(x - 1, 0) for x in self.profile)

    @property
    def is_regular(self) -> bool:
        return self.subspace.dim == self.r

    @cached_property
    def degenerate_nonzero(self) -> tuple[int, ...]:
        nd = set(self.nondegenerate)
        return tuple(i + 1 for i, x in enumerate(self.profile) if x and i + 1 not in nd)

    @cached_property
    def type_set(self) -> frozenset[Tuple]:
        m = self.profile
        below = lattice_points(m)
        if self.is_regular:
            return frozenset(below)
        nd = [i - 1 for i in self.nondegenerate]
        K = self.subspace
        out = set()
        for b in below:
            v = sum(1 << t for t, i in enumerate(nd) if b[i] == m[i])
            if v in K:
                out.add(b)
        return frozenset(out)

    def order(self, p: int = 2) -> int:
        if self.is_regular:
            return regular_order(self.profile, p)
        if p != 2:
            raise ValueError("irregular characteristic subgroups only occur for p = 2")
        return 2 ** (sum(self.kernel_profile) + self.subspace.dim + len(self.degenerate_nonzero))

    @property
    def sort_key(self):
        return self.profile, self.subspace.basis

    @property
    def label(self) -> str:
        """``R(m)`` when regular, else ``R(base)+T(t1)+T(t2)...``.

        ``base`` is the profile lowered by one on the nondegenerate coordinates;
        each ``T(t)`` names the top type of one extra coset fiber, one per
        nonzero vector of the subspace.
        """
        if self.is_regular:
            return "R" + _fmt(self.profile)
        m, mk = self.profile, self.kernel_profile
        nd = [i - 1 for i in self.nondegenerate]
        base = list(m)
        for i in nd:
            base[i] = mk[i]
        tops = []
        for v in sorted(self.subspace.elements() - {0}):
            t = list(base)
            for k, i in enumerate(nd):
                if v >> k & 1:
                    t[i] = m[i]
            tops.append(tuple(t))
        return "R" + _fmt(tuple(base)) + "".join("+T" + _fmt(t) for t in sorted(tops))

    def __str__(self):
        return self.label


def regular_order(a, p: int) -> int:
    return p ** sum(a)


def regular_subgroup(m, lam) -> CharSubgroup:
    m = check_tuple(m, lam)
    r = degeneracy(m, lam).r
    return CharSubgroup(tuple(lam), m, GF2Subspace.full(r))


def canonical_lattice(lam) -> FiniteLattice:
    """Canonical tuples of ``lam`` under the componentwise order."""
    canon = list(iter_canonical(lam))
    tuples = np.array(canon, dtype=np.int64).reshape(len(canon), len(lam))
    leq = (tuples[:, None, :] <= tuples[None, :, :]).all(axis=2)
    return FiniteLattice([tuple(map(int, t)) for t in tuples], leq)


def char_lattice_odd(s: PGroupSignature) -> FiniteLattice:
    """Characteristic subgroups for odd p, labelled by their canonical tuples."""
    if s.p == 2:
        raise SignatureError("char_lattice_odd needs an odd prime")
    if count_orbits(s.lam) > MAX_ELEMENTS:
        raise CapExceeded(f"{count_orbits(s.lam)} elements exceeds the cap of {MAX_ELEMENTS}")
    return canonical_lattice(s.lam)


def gaussian_binomial_2(i: int, j: int) -> int:
    """Number of ``j``-dimensional subspaces of ``GF(2)^i``."""
    if i < 0 or j < 0 or j > i:
        raise ValueError(f"need 0 <= j <= i, got i={i}, j={j}")
    num = math.prod(2 ** (i - l) - 1 for l in range(j))
    den = math.prod(2**l - 1 for l in range(1, j + 1))
    return num // den


@lru_cache(maxsize=None)
def count_projection_surjective(k: int) -> int:
    """Projection-surjective subspaces of ``GF(2)^k`` by inclusion-exclusion over coordinate subsets."""
    if k < 0:
        raise ValueError("k must be non-negative")
    return sum(
        (-1) ** (i + k) * math.comb(k, i) * sum(gaussian_binomial_2(i, j) for j in range(i + 1))
        for i in range(k + 1)
    )


@lru_cache(maxsize=None)
def _psurj(k: int) -> tuple[GF2Subspace, ...]:
    return tuple(iter_projection_surjective(k))


def enumerate_projection_surjective(k: int, cap: int = SUBSPACE_CAP) -> list[GF2Subspace]:
    if k < 0:
        raise ValueError("k must be non-negative")
    if k > cap:
        raise CapExceeded(f"subspace enumeration capped at k={cap}")
    return list(_psurj(k))


def char_subgroups_below(m, lam, cap: int = SUBSPACE_CAP) -> list[CharSubgroup]:
    """All characteristic subgroups with profile ``m`` in the 2-group with exponents ``lam``."""
    m = check_tuple(m, lam)
    r = degeneracy(m, lam).r
    return [CharSubgroup(tuple(lam), m, K) for K in enumerate_projection_surjective(r, cap)]


def expand_to_types(h: CharSubgroup) -> frozenset[Tuple]:
    return h.type_set


def char_lattice_2(s: PGroupSignature, max_tuples: int = MAX_TUPLES,
                   max_elements: int = MAX_ELEMENTS) -> FiniteLattice:
    """All characteristic subgroups of a 2-group, ordered by inclusion."""
    if s.p != 2:
        raise SignatureError("char_lattice_2 needs p = 2")
    if count_orbits(s.lam) > max_tuples:
        raise CapExceeded(f"{count_orbits(s.lam)} canonical tuples exceeds the cap of {max_tuples}")
    total = count_char_subgroups(s)
    if total > max_elements:
        raise CapExceeded(f"{total} characteristic subgroups exceeds the cap of {max_elements}")
    subs = sorted((h for m in iter_canonical(s.lam) for h in char_subgroups_below(m, s.lam)),
                  key=lambda h: h.sort_key)
    return inclusion_lattice(subs, s.lam)


def inclusion_lattice(subs: list[CharSubgroup], lam) -> FiniteLattice:
    index = {b: k for k, b in enumerate(lattice_points(lam))}
    masks = [sum(1 << index[b] for b in h.type_set) for h in subs]
    leq = np.array([[x & ~y == 0 for y in masks] for x in masks], dtype=bool).reshape(len(subs), len(subs))
    return FiniteLattice(subs, leq)


def char_lattice(s: PGroupSignature) -> FiniteLattice:
    """Characteristic-subgroup lattice for any prime, labelled by :class:`CharSubgroup`."""
    if s.p == 2:
        return char_lattice_2(s)
    lat = char_lattice_odd(s)
    return lat.relabel([regular_subgroup(m, s.lam) for m in lat.labels])


def _fiber_categories(delta: int):
    # (is_top, is_positive, multiplicity) for the step a_i - a_{i-1} in [0, delta]
    if delta == 0:
        return [(True, False, 1)]
    cats = [(False, False, 1), (True, True, 1)]
    if delta >= 2:
        cats.append((False, True, delta - 1))
    return cats


def count_char_subgroups(s: PGroupSignature) -> int:
    """Exact number of characteristic subgroups, without building the lattice.

    For p = 2 this is the sum over canonical profiles of the number of
    projection-surjective subspaces on their nondegenerate coordinates,
    evaluated by a pass over the coordinate steps: coordinate ``i`` is
    nondegenerate iff its step is positive and the next step is not maximal.
    """
    lam = s.lam
    if s.p != 2:
        return count_orbits(lam)
    n = len(lam)
    if n == 0:
        return 1
    deltas = [b - a for a, b in zip((0, *lam), lam)]
    # state[pos][r]: ways with the current step positive (pos) and r resolved nondegenerate coords
    state = [[0] * (n + 1) for _ in range(2)]
    for _, pos, mult in _fiber_categories(deltas[0]):
        state[pos][0] += mult
    for delta in deltas[1:]:
        nxt = [[0] * (n + 1) for _ in range(2)]
        for pos in (0, 1):
            for r, ways in enumerate(state[pos]):
                if not ways:
                    continue
                for top, npos, mult in _fiber_categories(delta):
                    nr = r + (1 if pos and not top else 0)
                    nxt[npos][nr] += ways * mult
        state = nxt
    return sum(ways * count_projection_surjective(r + pos)
               for pos in (0, 1) for r, ways in enumerate(state[pos]) if ways)


def count_char_subgroups_by_enumeration(s: PGroupSignature) -> int:
    """Same count by walking every canonical profile; for cross-checks."""
    if s.p != 2:
        return sum(1 for _ in iter_canonical(s.lam))
    return sum(count_projection_surjective(degeneracy(m, s.lam).r) for m in iter_canonical(s.lam))


def unique_atom(s: PGroupSignature) -> CharSubgroup:
    """The minimum nontrivial characteristic subgroup ``R(0,...,0,1,...,1)``.

    The number of trailing ones is the multiplicity of the largest exponent.
    """
    lam = s.lam
    if not lam:
        raise ValueError("the trivial group has no nontrivial characteristic subgroup")
    alpha = lam.count(lam[-1])
    return regular_subgroup((0,) * (len(lam) - alpha) + (1,) * alpha, lam)


def subgroup_element_count(h: CharSubgroup, p: int = 2) -> int:
    """Sum of type sizes over the type set."""
    return sum(type_size(b, p) for b in h.type_set)


def contains(h1: CharSubgroup, h2: CharSubgroup) -> bool:
    """``h1 <= h2`` as subgroups."""
    return tuple_leq(h1.profile, h2.profile) and h1.type_set <= h2.type_set
