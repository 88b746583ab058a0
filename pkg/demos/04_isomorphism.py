"""When do two groups have the same lattice of characteristic subgroups?"""

from __future__ import annotations

from itertools import combinations

from charlat import latticecore as lc
from charlat.charlattice import char_lattice_odd
from charlat.isodecide import decide_general, decide_odd_p
from charlat.signature import PGroupSignature, ReducedSignature, parse_signature

# Odd primes: search all tuples of total exponent at most 9 for coincidences.
tuples = sorted({tuple(sorted(set(c))) for n in range(1, 5) for c in combinations(range(1, 10), n) if sum(c) <= 9})
for a, b in combinations(tuples, 2):
    la, lb = char_lattice_odd(PGroupSignature(3, a)), char_lattice_odd(PGroupSignature(3, b))
    if len(la) == len(lb) and lc.is_isomorphic(la, lb):
        print(a, "~", b, "rule agrees:", decide_odd_p(ReducedSignature(3, a), ReducedSignature(3, b)))

# Mixed groups are matched one Sylow component at a time.
for x, y in [("6", "15"), ("3,9,81", "9,243"), ("2,8", "3,27"), ("4,32,7", "2,4,16,5"), ("12", "45")]:
    d = decide_general(parse_signature(x), parse_signature(y))
    print(x, "vs", y, d.isomorphic, [(m.component_of_g, m.component_of_h, m.match_kind) for m in d.matches])
