from __future__ import annotations

import pytest

from charlat import latticecore as lc
from charlat.charlattice import char_lattice_odd
from charlat.jposet import (
    JNode,
    downset_chains_bruteforce,
    downset_size,
    enumerate_j,
    entries_leq,
    j_dual,
    j_leq,
    maximal_downset_chains,
    upset_size,
)
from charlat.orbits import TupleError, degeneracy, is_canonical
from charlat.signature import PGroupSignature

from conftest import reduced_tuples


def J(lam, i, j):
    return JNode(tuple(lam), i, j)


def test_entries_examples():
    assert J((1, 3, 5, 7), 3, 3).entries == (0, 1, 3, 3)
    nodes = enumerate_j((2, 5))
    assert len(nodes) == 7
    assert J((2, 5), 2, 3).entries == (0, 3)
    assert J((2, 5), 1, 2).entries == (2, 2)
    assert [n.entries for n in enumerate_j((1,))] == [(1,)]
    assert repr(J((2, 5), 1, 2)) == "J(1,2)"


def test_invalid_nodes():
    with pytest.raises(TupleError):
        J((2, 5), 1, 3)
    with pytest.raises(TupleError):
        enumerate_j((2, 2))


def test_leq_examples():
    lam = (2, 5)
    assert j_leq(J(lam, 1, 1), J(lam, 2, 4))
    assert not j_leq(J(lam, 1, 1), J(lam, 2, 3))
    assert j_leq(J(lam, 2, 2), J(lam, 2, 2))


def test_dual_examples():
    lam = (2, 5)
    assert j_dual(J(lam, 2, 1)) == J(lam, 2, 5)
    assert j_dual(J(lam, 1, 1)) == J(lam, 1, 2)
    assert j_dual(J((1, 3), 2, 2)) == J((1, 3), 2, 2)


def test_downset_examples():
    lam = (2, 5)
    x = J(lam, 2, 3)
    assert downset_size(x) == 3
    assert {y for y in enumerate_j(lam) if j_leq(y, x)} == {J(lam, 2, 1), J(lam, 2, 2), J(lam, 2, 3)}
    assert downset_size(J((1, 3, 5, 7), 3, 3)) == 7
    for lam in reduced_tuples(8):
        assert downset_size(J(lam, len(lam), 1)) == 1


def test_chain_examples():
    d1, d2 = maximal_downset_chains((2, 5))
    assert set(d1) == {J((2, 5), 1, 1), J((2, 5), 2, 1)}
    assert set(d2) == {J((2, 5), 2, j) for j in (1, 2, 3)}
    d1, d2 = maximal_downset_chains((1, 2, 4))
    assert (len(d1), len(d2)) == (3, 2)
    d1, d2 = maximal_downset_chains((1, 3, 4))
    assert len(d2) == 5
    with pytest.raises(TupleError):
        maximal_downset_chains((1, 2))
    with pytest.raises(TupleError):
        maximal_downset_chains((3,))


LAMS = reduced_tuples(15)


def test_structure_all_small():
    for lam in LAMS:
        nodes = enumerate_j(lam)
        assert len(nodes) == sum(lam)
        for x in nodes:
            e = x.entries
            assert is_canonical(e, lam)
            assert degeneracy(e, lam).nondegenerate == (x.i,)
            assert j_dual(j_dual(x)) == x
            assert downset_size(x) == sum(j_leq(y, x) for y in nodes)
            assert upset_size(x) == sum(j_leq(x, y) for y in nodes)
            for y in nodes:
                assert j_leq(x, y) == entries_leq(x, y)
                assert j_leq(x, y) == j_leq(j_dual(y), j_dual(x))


def chains_apply(lam):
    return len(lam) >= 3 or (len(lam) == 2 and lam[1] - lam[0] >= 2)


def test_maximal_chains_match_search():
    checked = 0
    for lam in LAMS:
        if not chains_apply(lam):
            continue
        nodes = enumerate_j(lam)
        found = downset_chains_bruteforce(nodes, j_leq)
        d1, d2 = maximal_downset_chains(lam)
        assert set(found) == {frozenset(d1), frozenset(d2)}, lam
        checked += 1
    assert checked > 100


@pytest.mark.parametrize("lam", reduced_tuples(12))
def test_birkhoff_join_irreducibles(lam):
    lat = char_lattice_odd(PGroupSignature(3, lam))
    ji = sorted(lat.labels[i] for i in lc.join_irreducibles(lat))
    assert ji == sorted(x.entries for x in enumerate_j(lam))
