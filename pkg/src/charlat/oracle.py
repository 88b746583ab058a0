"""Brute-force ground truth on explicit small abelian groups.

Nothing in the group computations below uses the orbit or subgroup formulas
from the rest of the package; :func:`verify_against_formulas` is the only
place where the two sides meet.

Elements of ``Z_{m_1} x ... x Z_{m_n}`` are indexed in mixed radix (last
coordinate fastest). Subgroups are frozensets of element indices.

Orbits are computed as the connected components under the automorphisms that
move a single generator. That set generates the automorphism group here, but
rather than rely on it, the partition is certified: an automorphism-invariant
(which multiples ``k*x`` lie in which ``d*G``) must separate the computed
orbits exactly. Any gap raises :class:`OracleError`.
"""

from __future__ import annotations

import math
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
from sympy import divisors, factorint, primerange
from sympy.utilities.iterables import partitions

from .latticecore import CapExceeded, FiniteLattice, is_isomorphic
from .signature import GroupSignature, PGroupSignature

__all__ = [
    "OracleError",
    "ExplicitGroup",
    "ExplicitAutomorphism",
    "enumerate_automorphisms",
    "single_generator_automorphisms",
    "orbits_bruteforce",
    "subgroups_bruteforce",
    "characteristic_subgroups_bruteforce",
    "verify_against_formulas",
    "p_group_signatures",
    "sweep",
    "GROUP_CAP",
    "SUBGROUP_CAP",
]

GROUP_CAP = 512
SUBGROUP_CAP = 256
SEARCH_CAP = 10**6


class OracleError(RuntimeError):
    """The brute-force computation could not certify its own result."""


class ExplicitGroup:
    """``Z_{m_1} x ... x Z_{m_n}`` with full addition table."""

    def __init__(self, moduli: Sequence[int], cap: int = GROUP_CAP):
        self.moduli = tuple(int(m) for m in moduli)
        self.order = math.prod(self.moduli)
        if self.order > cap:
            raise CapExceeded(f"group of order {self.order} exceeds the cap of {cap}")
        n = len(self.moduli)
        grids = np.indices(self.moduli).reshape(n, -1).T if n else np.zeros((1, 0), dtype=np.int64)
        self.coords = grids.astype(np.int64)
        self._strides = np.array([math.prod(self.moduli[i + 1:]) for i in range(n)], dtype=np.int64)
        self._mod = np.array(self.moduli, dtype=np.int64)
        summed = (self.coords[:, None, :] + self.coords[None, :, :]) % self._mod
        self.add = summed @ self._strides if n else np.zeros((1, 1), dtype=np.int64)
        self.zero = 0

    @classmethod
    def from_signature(cls, s: PGroupSignature | GroupSignature, cap: int = GROUP_CAP) -> ExplicitGroup:
        moduli = s.moduli if isinstance(s, PGroupSignature) else s.factors
        return cls(moduli, cap)

    def __len__(self):
        return self.order

    def __repr__(self):
        return "ExplicitGroup(" + " x ".join(f"Z_{m}" for m in self.moduli) + ")"

    def index(self, coords: Sequence[int]) -> int:
        return int(np.dot(np.mod(coords, self._mod), self._strides))

    @property
    def generators(self) -> list[int]:
        """The unit vectors ``t_1, ..., t_n``."""
        return [int(s) for s in self._strides]

    def multiple(self, k: int) -> np.ndarray:
        """Index of ``k*x`` for every ``x``."""
        return ((self.coords * k) % self._mod) @ self._strides

    @cached_property
    def element_orders(self) -> np.ndarray:
        comp = self._mod // np.gcd(self.coords, self._mod)
        return np.lcm.reduce(comp, axis=1) if len(self.moduli) else np.ones(1, dtype=np.int64)

    def element_type(self, x: int) -> tuple[int, ...]:
        """Exponents ``a_i`` with ``|x_i| = p^{a_i}``; p-groups only."""
        out = []
        for c, m in zip(self.coords[x], self.moduli):
            ((p, _),) = factorint(m).items()
            out.append(_log(m // math.gcd(int(c), m), p))
        return tuple(out)

    def homomorphism(self, images: Sequence[int]) -> np.ndarray | None:
        """Map sending generator ``t_i`` to ``images[i]``, or None if ill-defined."""
        orders = self.element_orders
        for img, m in zip(images, self.moduli):
            if m % orders[img]:
                return None
        if not len(self.moduli):
            return np.zeros(1, dtype=np.int64)
        img_coords = self.coords[list(images)]
        return ((self.coords @ img_coords) % self._mod) @ self._strides

    def generated(self, gens: Iterable[int], start: frozenset[int] | None = None) -> frozenset[int]:
        h = np.zeros(self.order, dtype=bool)
        members = [self.zero] if start is None else list(start)
        h[members] = True
        for g in gens:
            if h[g]:
                continue
            cur = np.array(members, dtype=np.int64)
            new = []
            step = cur
            while True:
                step = self.add[step, g]
                fresh = step[~h[step]]
                if not len(fresh):
                    break
                h[fresh] = True
                new.extend(fresh.tolist())
            members.extend(new)
        return frozenset(members)

    def join(self, a: frozenset[int], b: frozenset[int]) -> frozenset[int]:
        sums = self.add[np.ix_(sorted(a), sorted(b))]
        return frozenset(np.unique(sums).tolist())

    @cached_property
    def invariants(self) -> list[tuple]:
        """Automorphism invariant: which ``k*x`` lie in ``d*G``, over divisors k, d of the exponent."""
        e = int(np.lcm.reduce(np.array(self.moduli, dtype=np.int64))) if self.moduli else 1
        divs = divisors(e)
        in_dg = []
        for d in divs:
            mask = np.zeros(self.order, dtype=bool)
            mask[self.multiple(d)] = True
            in_dg.append(mask)
        cols = [mask[self.multiple(k)] for k in divs for mask in in_dg]
        table = np.stack(cols, axis=1)
        return [tuple(row) for row in table.tolist()]


@dataclass(frozen=True)
class ExplicitAutomorphism:
    """An automorphism given by the images of the generators ``t_i``."""

    images: tuple[int, ...]

    def permutation(self, g: ExplicitGroup) -> np.ndarray:
        perm = g.homomorphism(self.images)
        if not _is_bijective(g, perm):
            raise OracleError(f"{self.images} does not define an automorphism")
        return perm


def _log(o: int, p: int) -> int:
    k = 0
    while o > 1:
        o //= p
        k += 1
    return k


def _is_bijective(g: ExplicitGroup, images: np.ndarray | None) -> bool:
    return images is not None and len(np.unique(images)) == g.order


def enumerate_automorphisms(g: ExplicitGroup, search_cap: int = SEARCH_CAP) -> list[ExplicitAutomorphism]:
    """Every automorphism, as the tuple of generator images.

    Backtracks over images of ``t_1, t_2, ...``; a partial choice survives only
    if the images so far generate a subgroup of the right size.
    """
    gens = g.generators
    cands = [[x for x in range(g.order) if m % g.element_orders[x] == 0] for m in g.moduli]
    if math.prod(len(c) for c in cands) > search_cap:
        raise CapExceeded("automorphism search space exceeds the cap")
    out: list[ExplicitAutomorphism] = []
    target = [math.prod(g.moduli[:k + 1]) for k in range(len(gens))]

    def rec(k: int, chosen: list[int], sub: frozenset[int]):
        if k == len(gens):
            if _is_bijective(g, g.homomorphism(chosen)):
                out.append(ExplicitAutomorphism(tuple(chosen)))
            return
        for x in cands[k]:
            nxt = g.generated([x], sub)
            if len(nxt) == target[k]:
                rec(k + 1, chosen + [x], nxt)

    rec(0, [], frozenset([g.zero]))
    return out


def single_generator_automorphisms(g: ExplicitGroup) -> list[np.ndarray]:
    """Automorphisms fixing every generator but one, as element permutations."""
    gens = g.generators
    out = []
    for i, m in enumerate(g.moduli):
        for x in range(g.order):
            if m % g.element_orders[x]:
                continue
            images = list(gens)
            images[i] = x
            perm = g.homomorphism(images)
            if _is_bijective(g, perm):
                out.append(perm)
    return out


def _union_find_orbits(g: ExplicitGroup, perms: Iterable[np.ndarray]) -> list[frozenset[int]]:
    parent = list(range(g.order))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for perm in perms:
        for x, y in enumerate(perm.tolist()):
            rx, ry = find(x), find(y)
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)
    classes = defaultdict(set)
    for x in range(g.order):
        classes[find(x)].add(x)
    return sorted((frozenset(c) for c in classes.values()), key=min)


def orbits_bruteforce(g: ExplicitGroup, automorphisms: Sequence[ExplicitAutomorphism] | None = None) -> list[frozenset[int]]:
    """Automorphism classes, sorted by smallest element index.

    With ``automorphisms`` given, orbits are taken under exactly
    that set; otherwise under the single-generator automorphisms, certified
    against the invariant.
    """
    if automorphisms is not None:
        return _union_find_orbits(g, (a.permutation(g) for a in automorphisms))
    orbits = _union_find_orbits(g, single_generator_automorphisms(g))
    inv = g.invariants
    seen: dict[tuple, int] = {}
    for k, orb in enumerate(orbits):
        keys = {inv[x] for x in orb}
        if len(keys) != 1:
            raise OracleError("an orbit mixes invariant classes")
        (key,) = keys
        if key in seen:
            raise OracleError(f"orbits {seen[key]} and {k} share an invariant; partition not certified")
        seen[key] = k
    return orbits


def _cyclic_subgroups(g: ExplicitGroup) -> list[frozenset[int]]:
    return sorted({g.generated([x]) for x in range(g.order)}, key=lambda h: (len(h), sorted(h)))


def subgroups_bruteforce(g: ExplicitGroup, cap: int = SUBGROUP_CAP) -> list[frozenset[int]]:
    """All subgroups: close the cyclic subgroups under joins."""
    if g.order > cap:
        raise CapExceeded(f"subgroup enumeration capped at order {cap}")
    cyclic = _cyclic_subgroups(g)
    found = set(cyclic)
    frontier = list(cyclic)
    while frontier:
        nxt = []
        for h in frontier:
            for c in cyclic:
                if c <= h:
                    continue
                j = g.join(h, c)
                if j not in found:
                    found.add(j)
                    nxt.append(j)
        frontier = nxt
    return sorted(found, key=lambda h: (len(h), sorted(h)))


def _is_union_of(h: frozenset[int], orbits: Sequence[frozenset[int]]) -> bool:
    return all(o <= h or not (o & h) for o in orbits)


def characteristic_subgroups_bruteforce(g: ExplicitGroup, orbits: Sequence[frozenset[int]] | None = None,
                                        method: str = "orbits") -> FiniteLattice:
    """Characteristic subgroups under inclusion, labelled by their element sets.

    ``method="orbits"`` closes the subgroups generated by single orbits under
    joins (every characteristic subgroup is such a join).
    ``method="subgroups"`` filters the full subgroup list for unions of orbits.
    """
    orbits = orbits_bruteforce(g) if orbits is None else orbits
    if method == "subgroups":
        subs = [h for h in subgroups_bruteforce(g) if _is_union_of(h, orbits)]
    elif method == "orbits":
        seeds = {g.generated(sorted(o)) for o in orbits}
        found = {frozenset([g.zero])} | seeds
        frontier = list(found)
        while frontier:
            nxt = []
            for h in frontier:
                for s in seeds:
                    if s <= h:
                        continue
                    j = g.join(h, s)
                    if j not in found:
                        found.add(j)
                        nxt.append(j)
            frontier = nxt
        subs = [h for h in found if _is_union_of(h, orbits)]
        if len(subs) != len(found):
            raise OracleError("a join of characteristic subgroups is not a union of orbits")
    else:
        raise ValueError(f"unknown method {method!r}")
    subs = sorted(subs, key=lambda h: (len(h), sorted(h)))
    leq = np.array([[a <= b for b in subs] for a in subs], dtype=bool).reshape(len(subs), len(subs))
    return FiniteLattice(subs, leq)


# ---------------------------------------------------------------------------
# cross-checks against the formula side


def _check(name, expected, actual, ok=None) -> dict:
    return {"name": name, "expected": expected, "actual": actual,
            "pass": bool(expected == actual if ok is None else ok)}


def _fmt_types(types) -> list[list[int]]:
    return [list(t) for t in sorted(types)]


def verify_against_formulas(s: PGroupSignature) -> dict:
    """Compare oracle orbits and characteristic subgroups of ``s`` with the formula constructions.

    Returns ``{"signature", "checks": [{"name", "expected", "actual", "pass"}]}``.
    """
    from .charlattice import char_lattice, count_char_subgroups, count_projection_surjective
    from .orbits import canonicalize, count_orbits, degeneracy, orbit_size, orbit_types

    lam, p = s.lam, s.p
    g = ExplicitGroup.from_signature(s)
    types = [g.element_type(x) for x in range(g.order)]
    orbits = orbits_bruteforce(g)
    checks = []

    checks.append(_check("orbit_count", count_orbits(lam), len(orbits)))
    checks.append(_check("orbit_sizes_sum", g.order, sum(len(o) for o in orbits)))

    oracle_split = {}
    for orb in orbits:
        ts = {types[x] for x in orb}
        top = tuple(map(max, zip(*ts))) if lam else ()
        oracle_split[top] = (ts, len(orb))
    checks.append(_check("orbit_maximum_type_present",
                         len(orbits), sum(top in ts for top, (ts, _) in oracle_split.items())))

    formula_split: dict[tuple, set] = defaultdict(set)
    for b in set(types):
        formula_split[canonicalize(b, lam)].add(b)
    exp = sorted((list(k), _fmt_types(v)) for k, v in formula_split.items())
    act = sorted((list(k), _fmt_types(ts)) for k, (ts, _) in oracle_split.items())
    checks.append(_check("orbit_partition_by_canonicalization", exp, act))

    if s.is_reduced:
        exp = sorted((list(a), _fmt_types(orbit_types(a, lam)), orbit_size(a, lam, p)) for a in formula_split)
        act = sorted((list(k), _fmt_types(ts), n) for k, (ts, n) in oracle_split.items())
        checks.append(_check("orbit_split_and_size", exp, act))

    lat = char_lattice(s)
    oracle_lat = characteristic_subgroups_bruteforce(g, orbits)
    checks.append(_check("char_count", count_char_subgroups(s), len(oracle_lat)))

    by_type = defaultdict(list)
    for x, t in enumerate(types):
        by_type[t].append(x)
    formula_sets = {}
    for h in lat.labels:
        formula_sets[frozenset(x for t in h.type_set for x in by_type[t])] = h
    oracle_sets = set(oracle_lat.labels)
    missing = sorted(formula_sets[k].label for k in formula_sets.keys() - oracle_sets)
    extra = sorted(sorted(k) for k in oracle_sets - formula_sets.keys())
    checks.append(_check("char_element_sets", {"missing": [], "extra": []}, {"missing": missing, "extra": extra}))

    orders_ok = all(len(k) == h.order(p) for k, h in formula_sets.items())
    checks.append(_check("char_orders", True, orders_ok))

    iso = len(lat) == len(oracle_lat) and is_isomorphic(lat, oracle_lat)
    checks.append(_check("char_lattice_isomorphic", True, iso))

    if p != 2:
        regular = 0
        for h in oracle_lat.labels:
            ts = {types[x] for x in h}
            top = tuple(map(max, zip(*ts))) if lam else ()
            if ts == {b for b in set(types) if all(u <= v for u, v in zip(b, top))}:
                regular += 1
        checks.append(_check("odd_all_regular", len(oracle_lat), regular))
    else:
        per_profile = defaultdict(int)
        for h in oracle_lat.labels:
            ts = {types[x] for x in h}
            per_profile[tuple(map(max, zip(*ts))) if lam else ()] += 1
        exp = {",".join(map(str, m)): count_projection_surjective(degeneracy(m, lam).r) for m in formula_split}
        act = {",".join(map(str, m)): c for m, c in per_profile.items()}
        checks.append(_check("per_profile_counts", dict(sorted(exp.items())), dict(sorted(act.items()))))

    return {"signature": {"p": p, "lambda": list(lam), "group": str(s)}, "checks": checks,
            "pass": all(c["pass"] for c in checks)}


def p_group_signatures(maxorder: int, primes: Iterable[int] | None = None) -> list[PGroupSignature]:
    """Every nontrivial abelian p-group signature of order at most ``maxorder``."""
    primes = list(primerange(2, maxorder + 1)) if primes is None else list(primes)
    out = []
    for p in primes:
        k = 1
        while p**k <= maxorder:
            for part in partitions(k):
                lam = tuple(sorted(x for x, mult in part.items() for _ in range(mult)))
                out.append(PGroupSignature(p, lam))
            k += 1
    return sorted(out, key=lambda s: (s.p, sum(s.lam), s.lam))


def sweep(maxorder: int, primes: Iterable[int] | None = None, jobs: int = 1) -> list[dict]:
    sigs = p_group_signatures(maxorder, primes)
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(jobs) as ex:
            return list(ex.map(verify_against_formulas, sigs))
    return [verify_against_formulas(s) for s in sigs]
