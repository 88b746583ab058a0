"""Deciding when two finite abelian groups have isomorphic characteristic lattices.

The lattice of a group is the product of the lattices of its Sylow
components, and each component lattice is directly indecomposable, so two
groups match iff their components can be paired off with isomorphic lattices.

Components are summarized by a :class:`ComponentInvariant`:

* ``chain``: the lattice is a chain; only its length matters.
* ``odd``: odd p, duplicates removed, with ``(2, 5)`` rewritten to
  ``(1, 2, 4)``. Equal tuples means isomorphic lattices, whatever the primes.
* ``explicit``: a 2-group that is not a chain group. No classification is
  known, so the lattice is built and compared by exact isomorphism search.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from . import latticecore as lc
from .charlattice import canonical_lattice, char_lattice_2
from .orbits import count_orbits
from .signature import (
    GroupSignature,
    PGroupSignature,
    ReducedSignature,
    SignatureError,
    reduce_duplicates,
    sylow_decompose,
)

__all__ = [
    "ComponentInvariant",
    "MatchRecord",
    "Decision",
    "is_chain_group",
    "has_irregular",
    "decide_odd_p",
    "component_invariant",
    "component_lattice",
    "decide_general",
    "is_distributive_char",
    "EXCEPTIONAL",
]

EXCEPTIONAL = ((2, 5), (1, 2, 4))


def is_chain_group(s: PGroupSignature) -> bool:
    """Exponents take at most two values, and two values differ by exactly 1."""
    vals = set(s.lam)
    return len(vals) <= 1 or (len(vals) == 2 and max(vals) - min(vals) == 1)


def has_irregular(s: PGroupSignature) -> bool:
    """Whether a 2-group has a characteristic subgroup that is not regular.

    True iff two exponents that each occur once differ by at least 2.
    """
    if s.p != 2:
        raise SignatureError("irregular characteristic subgroups only arise for p = 2")
    single = sorted(x for x in set(s.lam) if s.lam.count(x) == 1)
    return len(single) >= 2 and single[-1] - single[0] >= 2


def _is_consecutive_pair(t):
    return len(t) == 2 and t[1] == t[0] + 1


def decide_odd_p(a: ReducedSignature, b: ReducedSignature) -> bool:
    """Isomorphism of characteristic lattices for odd primes (primes may differ)."""
    for s in (a, b):
        if s.p == 2:
            raise SignatureError("decide_odd_p needs odd primes")
        if not s.is_reduced:
            raise SignatureError(f"{s.lam} has repeated exponents")
    la, lb = a.lam, b.lam
    if la == lb:
        return True
    for x, y in ((la, lb), (lb, la)):
        if _is_consecutive_pair(x) and len(y) == 1 and y[0] == 2 * x[0] + 1:
            return True
    return {la, lb} == set(EXCEPTIONAL)


@dataclass(frozen=True)
class ComponentInvariant:
    kind: str  # "chain" | "odd" | "explicit"
    source: PGroupSignature
    length: int | None = None
    exponents: tuple[int, ...] | None = None
    lattice: lc.FiniteLattice | None = field(default=None, compare=False, repr=False)

    def describe(self) -> str:
        if self.kind == "chain":
            return f"chain({self.length})"
        if self.kind == "odd":
            return f"odd{self.exponents}"
        return f"explicit({len(self.lattice)} elements)"


@lru_cache(maxsize=256)
def _lattice_2(s: PGroupSignature) -> lc.FiniteLattice:
    return char_lattice_2(s)


def component_invariant(s: PGroupSignature) -> ComponentInvariant:
    if is_chain_group(s):
        return ComponentInvariant("chain", s, length=count_orbits(s.lam))
    if s.p == 2:
        return ComponentInvariant("explicit", s, lattice=_lattice_2(s))
    lam = reduce_duplicates(s).lam
    if lam == EXCEPTIONAL[0]:
        lam = EXCEPTIONAL[1]
    return ComponentInvariant("odd", s, exponents=lam)


def component_lattice(inv: ComponentInvariant) -> lc.FiniteLattice:
    if inv.kind == "chain":
        return lc.chain(inv.length)
    if inv.kind == "odd":
        return canonical_lattice(inv.exponents)
    return inv.lattice


def _reduced_lam(s: PGroupSignature):
    return tuple(sorted(set(s.lam)))


def _match_kind(x: ComponentInvariant, y: ComponentInvariant) -> str | None:
    sx, sy = x.source, y.source
    if sx == sy:
        return "equal"
    if x.kind == "chain" and y.kind == "chain":
        if x.length != y.length:
            return None
        if sx.p != 2 and sy.p != 2:
            rx, ry = _reduced_lam(sx), _reduced_lam(sy)
            if rx == ry:
                return "equal" if sx.p == sy.p else "corpq"
            if decide_odd_p(ReducedSignature(sx.p, rx), ReducedSignature(sy.p, ry)):
                return "main-thm-ii"
        return "chain"
    if x.kind == "odd" and y.kind == "odd":
        if x.exponents != y.exponents:
            return None
        if _reduced_lam(sx) != _reduced_lam(sy):
            return "main-thm-iii"
        return "equal" if sx.p == sy.p else "corpq"
    if "explicit" in (x.kind, y.kind):
        lx, ly = component_lattice(x), component_lattice(y)
        if len(lx) == len(ly) and lc.is_isomorphic(lx, ly):
            return "explicit"
    return None


@dataclass(frozen=True)
class MatchRecord:
    component_of_g: str
    component_of_h: str
    match_kind: str


@dataclass
class Decision:
    isomorphic: bool
    matches: list[MatchRecord]
    unmatched: str | None = None

    def __bool__(self):
        return self.isomorphic

    def as_dict(self) -> dict:
        return {
            "isomorphic": self.isomorphic,
            "matches": [vars(m) for m in self.matches],
            "unmatched": self.unmatched,
        }


def decide_general(g: GroupSignature, h: GroupSignature) -> Decision:
    """Match Sylow components of ``g`` and ``h`` by lattice isomorphism.

    Pairs are found by maximum bipartite matching over the compatibility
    relation; the answer is yes iff every component is paired.
    """
    cg = [component_invariant(s) for s in sylow_decompose(g).values()]
    ch = [component_invariant(s) for s in sylow_decompose(h).values()]
    kinds = [[_match_kind(x, y) for y in ch] for x in cg]
    if not cg and not ch:
        return Decision(True, [])
    if not cg or not ch:
        first = (cg or ch)[0]
        return Decision(False, [], unmatched=str(first.source))
    adj = csr_matrix(np.array([[k is not None for k in row] for row in kinds], dtype=np.int8))
    pair = maximum_bipartite_matching(adj, perm_type="column")
    matches = [MatchRecord(str(cg[i].source), str(ch[j].source), kinds[i][j])
               for i, j in enumerate(pair) if j >= 0]
    unmatched = None
    if len(cg) != len(ch) or (pair < 0).any():
        if (pair < 0).any():
            unmatched = str(cg[int(np.argmax(pair < 0))].source)
        else:
            taken = set(int(j) for j in pair)
            unmatched = str(next(ch[j].source for j in range(len(ch)) if j not in taken))
        return Decision(False, matches, unmatched)
    return Decision(True, matches)


def is_distributive_char(s: PGroupSignature) -> bool:
    return s.p != 2 or not has_irregular(s)
