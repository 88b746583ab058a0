"""Explicit finite lattices.

A :class:`FiniteLattice` is a list of opaque labels plus a boolean order
matrix. Construction checks the partial-order axioms and that every pair has
a meet and a join, and tabulates both. Everything else (covers, predicates,
products, isomorphism) works on the index structure only, so lattices built
from different sources compare directly.
"""

from __future__ import annotations

import itertools
import sys
from functools import cached_property
from typing import Any, Callable, Hashable, Sequence

import numpy as np

__all__ = [
    "LatticeError",
    "CapExceeded",
    "FiniteLattice",
    "from_relation",
    "from_covers",
    "chain",
    "product",
    "is_distributive",
    "atoms",
    "join_irreducibles",
    "is_chain",
    "find_isomorphism",
    "is_isomorphic",
    "direct_factorization",
    "is_directly_indecomposable",
    "to_dot",
]

ISO_CAP = 5000


class LatticeError(ValueError):
    """The relation is not a partial order, or the poset is not a lattice."""


class CapExceeded(RuntimeError):
    """An explicit construction or search would exceed its size cap."""


class FiniteLattice:
    """Validated finite lattice.

    ``leq[i, j]`` is True iff element ``i`` is below element ``j``. ``meet`` and
    ``join`` are ``(n, n)`` index tables.
    """

    def __init__(self, labels: Sequence[Any], leq: np.ndarray):
        leq = np.array(leq, dtype=bool)
        n = len(labels)
        if n == 0:
            raise LatticeError("a lattice needs at least one element")
        if leq.shape != (n, n):
            raise LatticeError(f"relation has shape {leq.shape}, expected {(n, n)}")
        self.labels = list(labels)
        self.leq = leq
        self.leq.setflags(write=False)
        self._check_order()
        self.meet = self._bounds(self.leq)
        self.join = self._bounds(self.leq.T)
        self.meet.setflags(write=False)
        self.join.setflags(write=False)

    def _check_order(self):
        leq = self.leq
        if not leq.diagonal().all():
            raise LatticeError("relation is not reflexive")
        both = leq & leq.T
        if (both & ~np.eye(len(leq), dtype=bool)).any():
            raise LatticeError("relation is not antisymmetric")
        m = leq.astype(np.int32)
        if ((m @ m > 0) & ~leq).any():
            raise LatticeError("relation is not transitive")

    @staticmethod
    def _bounds(leq: np.ndarray) -> np.ndarray:
        # greatest common lower bound w.r.t. leq; call with leq.T for joins
        n = len(leq)
        size = leq.sum(axis=0)
        out = np.empty((n, n), dtype=np.int64)
        for x in range(n):
            common = leq[:, x : x + 1] & leq  # common[z, y]: z below x and y
            if not common.any(axis=0).all():
                raise LatticeError("some pair has no common bound")
            best = np.where(common, size[:, None], -1).argmax(axis=0)
            # every common bound must lie below the candidate
            if (common & ~leq[:, best]).any():
                raise LatticeError("some pair has no unique greatest common bound; not a lattice")
            out[x] = best
        return out

    def __len__(self):
        return len(self.labels)

    def __repr__(self):
        return f"FiniteLattice({len(self)} elements)"

    def index(self, label: Hashable) -> int:
        return self._index[label]

    @cached_property
    def _index(self) -> dict:
        return {lab: i for i, lab in enumerate(self.labels)}

    @cached_property
    def bottom(self) -> int:
        return int(self.leq.all(axis=1).argmax())

    @cached_property
    def top(self) -> int:
        return int(self.leq.all(axis=0).argmax())

    @cached_property
    def cover_matrix(self) -> np.ndarray:
        strict = self.leq & ~np.eye(len(self), dtype=bool)
        s = strict.astype(np.int32)
        return strict & ~(s @ s > 0)

    @cached_property
    def covers(self) -> list[tuple[int, int]]:
        """Hasse edges ``(lower, upper)`` in lexicographic order."""
        return [(int(i), int(j)) for i, j in zip(*np.nonzero(self.cover_matrix))]

    @cached_property
    def lower_covers(self) -> list[list[int]]:
        c = self.cover_matrix
        return [list(map(int, np.nonzero(c[:, j])[0])) for j in range(len(self))]

    @cached_property
    def upper_covers(self) -> list[list[int]]:
        c = self.cover_matrix
        return [list(map(int, np.nonzero(c[i])[0])) for i in range(len(self))]

    @cached_property
    def downset_sizes(self) -> np.ndarray:
        return self.leq.sum(axis=0)

    @cached_property
    def upset_sizes(self) -> np.ndarray:
        return self.leq.sum(axis=1)

    @cached_property
    def heights(self) -> np.ndarray:
        """Length of the longest chain from the bottom to each element."""
        h = np.zeros(len(self), dtype=np.int64)
        for j in np.argsort(self.downset_sizes, kind="stable"):
            lc = self.lower_covers[j]
            if lc:
                h[j] = max(h[i] for i in lc) + 1
        return h

    @cached_property
    def depths(self) -> np.ndarray:
        d = np.zeros(len(self), dtype=np.int64)
        for i in np.argsort(self.upset_sizes, kind="stable"):
            uc = self.upper_covers[i]
            if uc:
                d[i] = max(d[j] for j in uc) + 1
        return d

    def relabel(self, labels: Sequence[Any]) -> FiniteLattice:
        if len(labels) != len(self):
            raise ValueError("label count mismatch")
        out = object.__new__(FiniteLattice)
        out.labels = list(labels)
        out.leq, out.meet, out.join = self.leq, self.meet, self.join
        return out


def from_relation(labels: Sequence[Any], leq: Callable[[Any, Any], bool]) -> FiniteLattice:
    labels = list(labels)
    mat = np.array([[bool(leq(x, y)) for y in labels] for x in labels], dtype=bool).reshape(len(labels), len(labels))
    return FiniteLattice(labels, mat)


def from_covers(labels: Sequence[Any], covers: Sequence[tuple[int, int]]) -> FiniteLattice:
    """Rebuild a lattice from Hasse edges by reflexive-transitive closure."""
    n = len(labels)
    r = np.eye(n, dtype=bool)
    for i, j in covers:
        r[i, j] = True
    while True:
        nxt = (r.astype(np.int32) @ r.astype(np.int32)) > 0
        if (nxt == r).all():
            break
        r = nxt
    return FiniteLattice(labels, r)


def chain(k: int) -> FiniteLattice:
    """The chain ``0 < 1 < ... < k-1``."""
    idx = np.arange(k)
    return FiniteLattice(list(range(k)), idx[:, None] <= idx[None, :])


def product(a: FiniteLattice, b: FiniteLattice) -> FiniteLattice:
    labels = [(x, y) for x in a.labels for y in b.labels]
    return FiniteLattice(labels, np.kron(a.leq, b.leq).astype(bool))


def is_distributive(lat: FiniteLattice) -> bool:
    """Check ``x & (y | z) == (x & y) | (x & z)`` over all triples."""
    meet, join = lat.meet, lat.join
    for x in range(len(lat)):
        mx = meet[x]
        if (mx[join] != join[mx[:, None], mx[None, :]]).any():
            return False
    return True


def atoms(lat: FiniteLattice) -> list[int]:
    return lat.upper_covers[lat.bottom]


def join_irreducibles(lat: FiniteLattice) -> list[int]:
    return [j for j in range(len(lat)) if len(lat.lower_covers[j]) == 1]


def is_chain(lat: FiniteLattice) -> bool:
    return bool((lat.leq | lat.leq.T).all())


def _refined_colors(lats: Sequence[FiniteLattice]) -> list[list[int]]:
    """Colour refinement run on the disjoint union so colours are comparable."""
    cols = []
    for lat in lats:
        cols.append([
            (int(lat.heights[i]), int(lat.depths[i]), len(lat.upper_covers[i]), len(lat.lower_covers[i]),
             int(lat.downset_sizes[i]), int(lat.upset_sizes[i]))
            for i in range(len(lat))
        ])
    while True:
        sigs = []
        for lat, col in zip(lats, cols):
            sigs.append([
                (col[i], tuple(sorted(col[j] for j in lat.upper_covers[i])),
                 tuple(sorted(col[j] for j in lat.lower_covers[i])))
                for i in range(len(lat))
            ])
        palette = {s: k for k, s in enumerate(sorted(set(itertools.chain.from_iterable(sigs))))}
        new = [[palette[s] for s in sig] for sig in sigs]
        n_old = len(set(itertools.chain.from_iterable(cols)))
        cols = new
        if len(palette) == n_old:
            return cols


def find_isomorphism(a: FiniteLattice, b: FiniteLattice, cap: int = ISO_CAP) -> list[int] | None:
    """An order isomorphism ``a -> b`` as an index list, or None.

    Backtracking over colour-preserving assignments; each partial map is
    checked against ``x <= y  <=>  f(x) <= f(y)`` on everything assigned so far.
    """
    if len(a) > cap or len(b) > cap:
        raise CapExceeded(f"isomorphism search capped at {cap} elements")
    if len(a) != len(b):
        return None
    ca, cb = _refined_colors([a, b])
    if sorted(ca) != sorted(cb):
        return None
    n = len(a)
    by_color: dict[int, list[int]] = {}
    for j, c in enumerate(cb):
        by_color.setdefault(c, []).append(j)
    # rarest colours first, then bottom-up
    order = sorted(range(n), key=lambda i: (len(by_color[ca[i]]), int(a.heights[i]), i))
    fmap = [-1] * n
    used = [False] * n
    la, lb = a.leq, b.leq

    def extend(k: int) -> bool:
        if k == n:
            return True
        x = order[k]
        done = order[:k]
        fx = [fmap[y] for y in done]
        ax_up, ax_dn = la[x, done], la[done, x]
        for cand in by_color[ca[x]]:
            if used[cand]:
                continue
            if k and ((lb[cand, fx] != ax_up).any() or (lb[fx, cand] != ax_dn).any()):
                continue
            fmap[x], used[cand] = cand, True
            if extend(k + 1):
                return True
            fmap[x], used[cand] = -1, False
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, n + 100))
    try:
        found = extend(0)
    finally:
        sys.setrecursionlimit(limit)
    return fmap if found else None


def is_isomorphic(a: FiniteLattice, b: FiniteLattice, cap: int = ISO_CAP) -> bool:
    return find_isomorphism(a, b, cap) is not None


def direct_factorization(lat: FiniteLattice) -> tuple[int, int] | None:
    """Complementary elements ``(a, b)`` with ``lat ~ [0, a] x [0, b]``, both nontrivial, or None.

    ``(y, z) -> y | z`` is an isomorphism from ``[0, a] x [0, b]`` exactly when
    every ``x`` equals ``(x & a) | (x & b)`` and ``(y | z) & a == y``,
    ``(y | z) & b == z`` for all ``y <= a``, ``z <= b``.
    """
    meet, join, leq = lat.meet, lat.join, lat.leq
    bot, top = lat.bottom, lat.top
    xs = np.arange(len(lat))
    for a in range(len(lat)):
        if a in (bot, top):
            continue
        below_a = np.nonzero(leq[:, a])[0]
        for b in np.nonzero((meet[a] == bot) & (join[a] == top))[0]:
            if b in (bot, top):
                continue
            if (join[meet[xs, a], meet[xs, b]] != xs).any():
                continue
            below_b = np.nonzero(leq[:, b])[0]
            yz = join[np.ix_(below_a, below_b)]
            if (meet[yz, a] != below_a[:, None]).any() or (meet[yz, b] != below_b[None, :]).any():
                continue
            return int(a), int(b)
    return None


def is_directly_indecomposable(lat: FiniteLattice, exhaustive: bool = False, cap: int = ISO_CAP) -> bool:
    """True iff ``lat`` is not a product of two nontrivial lattices.

    A nontrivial product has at least two atoms, so one atom settles it unless
    ``exhaustive`` asks for the factor search regardless. The trivial lattice
    counts as indecomposable.
    """
    if len(lat) == 1:
        return True
    if len(atoms(lat)) < 2 and not exhaustive:
        return True
    if len(lat) > cap:
        raise CapExceeded(f"factor search capped at {cap} elements")
    return direct_factorization(lat) is None


def to_dot(lat: FiniteLattice, name: Callable[[Any], str] = str) -> str:
    """Hasse diagram as DOT, edges from lower cover to upper cover."""
    names = [name(lab) for lab in lat.labels]
    lines = ["digraph {"]
    lines += [f'  "{s}";' for s in names]
    lines += [f'  "{names[i]}" -> "{names[j]}";' for i, j in lat.covers]
    lines.append("}")
    return "\n".join(lines) + "\n"
