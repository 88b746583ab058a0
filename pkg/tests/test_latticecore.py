from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from charlat import latticecore as lc
from charlat.charlattice import char_lattice_2, char_lattice_odd
from charlat.orbits import enumerate_canonical, tuple_leq
from charlat.signature import PGroupSignature

from conftest import exponent_tuples


def square():
    return lc.product(lc.chain(2), lc.chain(2))


def diamond():
    # M3: bottom, three atoms, top
    return lc.from_covers(range(5), [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])


def test_rejects_non_lattices():
    with pytest.raises(lc.LatticeError):
        lc.FiniteLattice([0, 1], np.eye(2, dtype=bool))  # two maximal elements
    with pytest.raises(lc.LatticeError):
        lc.FiniteLattice([0, 1], np.ones((2, 2), dtype=bool))  # not antisymmetric
    with pytest.raises(lc.LatticeError):
        lc.from_covers(range(6), [(0, 1), (0, 2), (1, 3), (2, 3), (1, 4), (2, 4), (3, 5), (4, 5)])  # no join of 1,2
    with pytest.raises(lc.LatticeError):
        lc.FiniteLattice([], np.zeros((0, 0), dtype=bool))


def test_caller_array_untouched():
    leq = np.tri(3, dtype=bool).T
    lc.FiniteLattice(range(3), leq)
    leq[0, 0] = True  # still writable


def test_from_relation_hexagon():
    lat = lc.from_relation(enumerate_canonical((1, 3)), tuple_leq)
    assert len(lat) == 6
    assert len(lat.covers) == 6
    incomparable = [(lat.labels[i], lat.labels[j]) for i in range(6) for j in range(i + 1, 6)
                    if not lat.leq[i, j] and not lat.leq[j, i]]
    assert incomparable == [((0, 2), (1, 1))]
    assert lc.is_distributive(lat)


def test_trivial_lattice():
    lat = lc.chain(1)
    assert lat.bottom == lat.top == 0
    assert lc.atoms(lat) == []
    assert lc.is_directly_indecomposable(lat)
    assert lc.is_chain(lat)


def test_meet_join_tables():
    lat = square()
    bot, top = lat.bottom, lat.top
    a, b = [i for i in range(4) if i not in (bot, top)]
    assert lat.meet[a, b] == bot and lat.join[a, b] == top
    assert (lat.meet == lat.meet.T).all() and (lat.join == lat.join.T).all()


def test_distributivity():
    assert not lc.is_distributive(char_lattice_2(PGroupSignature(2, (1, 3))))
    assert lc.is_distributive(char_lattice_odd(PGroupSignature(3, (1, 3))))
    assert lc.is_distributive(lc.chain(7))
    assert not lc.is_distributive(diamond())


def test_atoms_and_join_irreducibles():
    lat = char_lattice_odd(PGroupSignature(3, (1, 3)))
    assert [lat.labels[i] for i in lc.atoms(lat)] == [(0, 1)]
    ji = sorted(lat.labels[i] for i in lc.join_irreducibles(lat))
    assert ji == [(0, 1), (0, 2), (1, 1), (1, 3)]
    assert len(lc.join_irreducibles(lc.chain(5))) == 4
    assert len(lc.atoms(square())) == 2


def test_product():
    assert len(square()) == 4 and not lc.is_chain(square())
    grid = lc.product(lc.chain(3), lc.chain(3))
    assert len(grid) == 9 and len(grid.covers) == 12
    single = lc.chain(1)
    lat = lc.from_relation(enumerate_canonical((2, 5)), tuple_leq)
    assert lc.is_isomorphic(lc.product(lat, single), lat)


def test_isomorphism_examples():
    assert lc.is_isomorphic(char_lattice_odd(PGroupSignature(3, (2, 5))), char_lattice_odd(PGroupSignature(3, (1, 2, 4))))
    assert lc.is_isomorphic(char_lattice_2(PGroupSignature(2, (2, 5))), char_lattice_2(PGroupSignature(2, (1, 2, 4))))
    assert not lc.is_isomorphic(lc.chain(4), square())
    assert not lc.is_isomorphic(diamond(), lc.chain(5))
    assert not lc.is_isomorphic(char_lattice_odd(PGroupSignature(3, (1, 5))), char_lattice_odd(PGroupSignature(3, (2, 4))))


def test_isomorphism_cap():
    with pytest.raises(lc.CapExceeded):
        lc.find_isomorphism(lc.chain(10), lc.chain(10), cap=5)


def witness_ok(a, b, f):
    f = np.asarray(f)
    return sorted(f.tolist()) == list(range(len(b))) and (a.leq == b.leq[np.ix_(f, f)]).all()


def small_lattices():
    out = [lc.chain(1), lc.chain(4), square(), diamond()]
    for lam in exponent_tuples(6):
        out.append(char_lattice_odd(PGroupSignature(3, lam)))
        out.append(char_lattice_2(PGroupSignature(2, lam)))
    return out


def test_isomorphism_is_equivalence_with_witness():
    lats = small_lattices()
    for a in lats:
        f = lc.find_isomorphism(a, a)
        assert f is not None and witness_ok(a, a, f)
    for a in lats[:20]:
        for b in lats[:20]:
            f = lc.find_isomorphism(a, b)
            g = lc.find_isomorphism(b, a)
            assert (f is None) == (g is None)
            if f is not None:
                assert witness_ok(a, b, f)


@settings(max_examples=30, deadline=None)
@given(st.permutations(range(12)))
def test_isomorphism_survives_relabelling(perm):
    lat = char_lattice_odd(PGroupSignature(3, (2, 5)))
    perm = np.array(perm)
    shuffled = lc.FiniteLattice([lat.labels[i] for i in perm], lat.leq[np.ix_(perm, perm)])
    f = lc.find_isomorphism(lat, shuffled)
    assert f is not None and witness_ok(lat, shuffled, f)


def test_covers_round_trip():
    for lat in small_lattices():
        rebuilt = lc.from_covers(lat.labels, lat.covers)
        assert (rebuilt.leq == lat.leq).all()


def test_direct_decomposition():
    assert lc.is_directly_indecomposable(char_lattice_odd(PGroupSignature(3, (2, 5))), exhaustive=True)
    assert not lc.is_directly_indecomposable(square())
    grid = lc.product(lc.chain(3), diamond())
    a, b = lc.direct_factorization(grid)
    sizes = sorted([int(grid.leq[:, a].sum()), int(grid.leq[:, b].sum())])
    assert sizes == [3, 5]
    assert lc.is_directly_indecomposable(diamond(), exhaustive=True)


def test_birkhoff_cross_check():
    # distributive lattices are isomorphic iff their join-irreducible posets are
    lats = [char_lattice_odd(PGroupSignature(3, lam)) for lam in exponent_tuples(7)]

    def ji_poset(lat):
        ji = lc.join_irreducibles(lat)
        return ji, lat.leq[np.ix_(ji, ji)]

    def posets_isomorphic(p, q):
        from itertools import permutations
        (ja, la), (jb, lb) = p, q
        if len(ja) != len(jb) or la.sum() != lb.sum():
            return False
        return any((la == lb[np.ix_(f, f)]).all() for f in map(list, permutations(range(len(jb)))))

    for a in lats:
        for b in lats:
            if len(a) != len(b) or len(lc.join_irreducibles(a)) > 6:
                continue
            assert lc.is_isomorphic(a, b) == posets_isomorphic(ji_poset(a), ji_poset(b))


def test_heights_and_dot():
    lat = char_lattice_2(PGroupSignature(2, (1, 3)))
    assert lat.heights[lat.bottom] == 0
    assert lat.heights[lat.top] == 4
    dot = lc.to_dot(lat)
    assert dot.startswith("digraph {") and dot.count("->") == len(lat.covers)
