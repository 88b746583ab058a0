"""Automorphism classes of Z_2 x Z_8, by formula and by brute force."""

from __future__ import annotations

from charlat.oracle import ExplicitGroup, orbits_bruteforce
from charlat.orbits import count_orbits, degeneracy, enumerate_canonical, orbit_size, orbit_types

lam, p = (1, 3), 2

# Every element has a type: the exponents of its coordinate orders.
# Canonical types label the classes; the count is a product of gaps.
print("classes:", count_orbits(lam))
for a in enumerate_canonical(lam):
    types = sorted(orbit_types(a, lam), reverse=True)
    d = degeneracy(a, lam)
    print(f"O{a}: types {types}, size {orbit_size(a, lam, p)}, nondegenerate coords {d.nondegenerate}")

# Same thing from the explicit group. Element (x, y) stands for s^x t^y.
g = ExplicitGroup((2, 8))
for orb in orbits_bruteforce(g):
    elems = sorted(tuple(int(c) for c in g.coords[x]) for x in orb)
    print(len(orb), elems)
