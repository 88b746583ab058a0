"""Characteristic subgroups that are not regular, which only happen for p = 2."""

from __future__ import annotations

from charlat import latticecore as lc
from charlat.charlattice import char_lattice, char_lattice_2
from charlat.isodecide import has_irregular
from charlat.signature import PGroupSignature

z2z8 = char_lattice_2(PGroupSignature(2, (1, 3)))
for h in z2z8.labels:
    print(f"{h.label:16s} order {h.order():3d}  types {sorted(h.type_set)}")
print("distributive:", lc.is_distributive(z2z8))
print(lc.to_dot(z2z8))

# The odd-prime lattice of the same shape has one element fewer and is distributive.
z3z27 = char_lattice(PGroupSignature(3, (1, 3)))
print(len(z3z27), lc.is_distributive(z3z27))

# A 2-group has irregular characteristic subgroups exactly when two
# exponents occurring once differ by at least two.
for lam in [(1, 2), (1, 3), (1, 1, 3), (1, 3, 3), (2, 4, 5), (1, 2, 3, 4)]:
    s = PGroupSignature(2, lam)
    irregular = [h.label for h in char_lattice_2(s).labels if not h.is_regular]
    print(lam, has_irregular(s), len(irregular))
