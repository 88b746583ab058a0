"""Join-irreducible characteristic subgroups for odd p and distinct exponents.

With ``0 < l_1 < ... < l_n`` the join-irreducibles of the characteristic
lattice are the regular subgroups ``J(i, j)``, ``1 <= i <= n``,
``1 <= j <= l_i``, whose entries are ``j`` from coordinate ``i`` on and
``max(j - (l_i - l_k), 0)`` at ``k < i``. Indices ``i`` and ``j`` are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .orbits import TupleError, tuple_leq

__all__ = [
    "JNode",
    "enumerate_j",
    "j_leq",
    "j_dual",
    "downset_size",
    "upset_size",
    "maximal_downset_chains",
    "downset_chains_bruteforce",
]


def _require_reduced(lam):
    lam = tuple(lam)
    if any(x < 1 for x in lam) or any(x >= y for x, y in zip(lam, lam[1:])):
        raise TupleError(f"exponents {lam} must be positive and strictly increasing")
    return lam


@dataclass(frozen=True, order=True)
class JNode:
    lam: tuple[int, ...]
    i: int
    j: int

    def __post_init__(self):
        if not 1 <= self.i <= len(self.lam) or not 1 <= self.j <= self.lam[self.i - 1]:
            raise TupleError(f"J({self.i},{self.j}) does not exist for {self.lam}")

    @property
    def entries(self) -> tuple[int, ...]:
        li = self.lam[self.i - 1]
        return tuple(self.j if k >= self.i else max(self.j - (li - self.lam[k - 1]), 0)
                     for k in range(1, len(self.lam) + 1))

    def __repr__(self):
        return f"J({self.i},{self.j})"


def enumerate_j(lam: Sequence[int]) -> list[JNode]:
    lam = _require_reduced(lam)
    return [JNode(lam, i, j) for i in range(1, len(lam) + 1) for j in range(1, lam[i - 1] + 1)]


def j_leq(x: JNode, y: JNode) -> bool:
    """``J(i1, j1) <= J(i2, j2)`` iff ``j2 - j1 >= max(0, l_i2 - l_i1)``."""
    if x.lam != y.lam:
        raise TupleError("nodes belong to different groups")
    lam = x.lam
    return y.j - x.j >= max(0, lam[y.i - 1] - lam[x.i - 1])


def j_dual(x: JNode) -> JNode:
    """Order-reversing involution ``J(i, j) -> J(i, l_i - j + 1)``."""
    return JNode(x.lam, x.i, x.lam[x.i - 1] - x.j + 1)


def downset_size(x: JNode) -> int:
    return sum(x.entries)


def upset_size(x: JNode) -> int:
    return downset_size(j_dual(x))


def maximal_downset_chains(lam: Sequence[int]) -> tuple[list[JNode], list[JNode]]:
    """The two maximal down-set chains, each listed bottom-up.

    Needs ``n >= 2`` with top gap ``l_n - l_{n-1} >= 2``, or ``n >= 3`` with
    top gap 1. Other shapes are refused.
    """
    lam = _require_reduced(lam)
    n = len(lam)
    if n < 2 or (n == 2 and lam[-1] - lam[-2] == 1):
        raise TupleError(f"no down-set chain description for {lam}")
    d1 = [JNode(lam, i, 1) for i in range(n, 0, -1)]
    gap = lam[-1] - lam[-2]
    if gap >= 2:
        d2 = [JNode(lam, n, j) for j in range(1, gap + 1)]
    else:
        low = lam[-2] - lam[-3]
        d2 = [JNode(lam, n - 1, j) for j in range(1, low + 1)] + [JNode(lam, n, j) for j in range(1, low + 2)]
    everything = enumerate_j(lam)
    for ch in (d1, d2):
        ch.sort(key=downset_size)
        if not all(j_leq(a, b) for a, b in zip(ch, ch[1:])):
            raise RuntimeError(f"{ch} is not a chain")
        if not all(y in ch for x in ch for y in everything if j_leq(y, x)):
            raise RuntimeError(f"{ch} is not a down-set")
    return d1, d2


def downset_chains_bruteforce(nodes: Sequence, leq) -> list[frozenset]:
    """Maximal subsets that are both chains and down-sets, by exhaustive search.

    A down-set chain is ``x_1 < ... < x_k`` whose top has down-set exactly
    ``{x_1, ..., x_k}``; the search grows such chains one element at a time.
    """
    nodes = list(nodes)
    below = {x: frozenset(y for y in nodes if leq(y, x)) for x in nodes}
    found: set[frozenset] = set()

    def grow(cur: frozenset):
        extended = False
        for x in nodes:
            if x not in cur and below[x] == cur | {x}:
                extended = True
                grow(cur | {x})
        if not extended:
            found.add(cur)

    grow(frozenset())
    return sorted(found, key=lambda s: (len(s), sorted(map(repr, s))))


def entries_leq(x: JNode, y: JNode) -> bool:
    return tuple_leq(x.entries, y.entries)
