"""How many characteristic subgroups does Z_2 x Z_4 x ... x Z_{2^n} have?"""

from __future__ import annotations

import time

from charlat.charlattice import count_char_subgroups, count_char_subgroups_by_enumeration, count_projection_surjective
from charlat.signature import PGroupSignature

# Irregular subgroups below a profile correspond to subspaces of GF(2)^r
# that project onto every coordinate.
print([count_projection_surjective(k) for k in range(12)])

t0 = time.perf_counter()
for n in range(1, 41):
    s = PGroupSignature(2, tuple(range(1, n + 1)))
    print(f"{n:2d} {count_char_subgroups(s)}")
print(f"forty rows in {time.perf_counter() - t0:.3f}s")

# The closed-form pass agrees with summing over every canonical profile.
for n in range(1, 9):
    s = PGroupSignature(2, tuple(range(1, n + 1)))
    assert count_char_subgroups(s) == count_char_subgroups_by_enumeration(s)
