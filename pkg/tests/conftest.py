from __future__ import annotations

from itertools import combinations

from sympy.utilities.iterables import partitions


def exponent_tuples(max_total: int, min_total: int = 1):
    """Weakly increasing exponent tuples with sum in [min_total, max_total]."""
    out = []
    for k in range(min_total, max_total + 1):
        for part in partitions(k):
            out.append(tuple(sorted(x for x, mult in part.items() for _ in range(mult))))
    return out


def reduced_tuples(max_total: int, min_total: int = 1):
    """Strictly increasing exponent tuples with sum in [min_total, max_total]."""
    out = []
    for n in range(1, max_total + 1):
        for c in combinations(range(1, max_total + 1), n):
            if min_total <= sum(c) <= max_total:
                out.append(c)
    return sorted(out, key=lambda t: (sum(t), t))
