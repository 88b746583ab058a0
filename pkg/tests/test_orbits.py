from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from charlat.orbits import (
    TupleError,
    canonical_violation,
    canonicalize,
    check_tuple,
    count_orbits,
    degeneracy,
    enumerate_canonical,
    is_canonical,
    lattice_points,
    orbit_partition,
    orbit_size,
    orbit_types,
    tuple_join,
    tuple_leq,
    tuple_meet,
)

from conftest import exponent_tuples, reduced_tuples


def test_meet_join_leq():
    assert tuple_meet((1, 2), (0, 3)) == (0, 2)
    assert tuple_join((1, 2), (0, 3)) == (1, 3)
    assert tuple_leq((1, 1), (1, 4))
    assert not tuple_leq((1, 2), (0, 3))


def test_check_tuple():
    assert check_tuple([1, 2], (1, 3)) == (1, 2)
    with pytest.raises(TupleError):
        check_tuple((2, 0), (1, 3))
    with pytest.raises(TupleError):
        check_tuple((1,), (1, 3))


def test_violations():
    assert canonical_violation((1, 2), (1, 3)) is None
    assert canonical_violation((0, 3), (1, 3)) == (1, "II")
    assert canonical_violation((1, 0), (1, 3)) == (2, "I")
    assert is_canonical((), ())


def test_canonicalize_examples():
    assert canonicalize((0, 3), (1, 3)) == (1, 3)
    assert canonicalize((1, 0), (1, 3)) == (1, 1)
    assert canonicalize((0, 2), (1, 3)) == (0, 2)


def test_enumerate_examples():
    assert enumerate_canonical((1, 3)) == [(0, 0), (0, 1), (0, 2), (1, 1), (1, 2), (1, 3)]
    assert enumerate_canonical(()) == [()]
    assert len(enumerate_canonical((2, 5))) == 12


def test_count_examples():
    assert count_orbits((1, 3)) == 6
    assert count_orbits((1, 1)) == 2
    assert count_orbits(tuple(range(1, 41))) == 2**40


def test_degeneracy_examples():
    d = degeneracy((1, 3, 3), (1, 3, 5))
    assert d.degenerate == {1, 3}
    assert d.nondegenerate == (2,)
    assert d.r == 1
    assert degeneracy((1, 2), (1, 3)).r == 2
    assert degeneracy((0, 0), (1, 3)).r == 0
    # only (1,2) has two nondegenerate coordinates for (1,3)
    assert [a for a in enumerate_canonical((1, 3)) if degeneracy(a, (1, 3)).r == 2] == [(1, 2)]


def test_orbit_types_examples():
    expected = {(x, 3, z) for x in (0, 1) for z in range(4)}
    assert orbit_types((1, 3, 3), (1, 3, 5)) == expected
    assert orbit_types((1, 1), (1, 3)) == {(1, 0), (1, 1)}
    assert orbit_types((0, 0), (1, 3)) == {(0, 0)}
    with pytest.raises(TupleError):
        orbit_types((1, 1), (1, 1))


def test_orbit_size_examples():
    assert orbit_size((1, 3), (1, 3), 2) == 8
    assert orbit_size((0, 2), (1, 3), 2) == 2
    assert orbit_size((0, 0), (1, 3), 5) == 1


@pytest.mark.parametrize("lam", exponent_tuples(8))
def test_count_matches_enumeration(lam):
    canon = enumerate_canonical(lam)
    assert len(canon) == count_orbits(lam)
    assert canon == sorted(canon)
    assert all(is_canonical(a, lam) for a in canon)
    assert sum(is_canonical(a, lam) for a in lattice_points(lam)) == len(canon)


def test_count_matches_enumeration_large():
    for lam in exponent_tuples(20, 18)[::40]:
        assert len(enumerate_canonical(lam)) == count_orbits(lam)


@pytest.mark.parametrize("lam", reduced_tuples(9))
def test_partition_and_conservation(lam):
    seen = set()
    for a in enumerate_canonical(lam):
        types = orbit_types(a, lam)
        assert not seen & types
        seen |= types
        assert all(tuple_leq(b, a) and canonicalize(b, lam) == a for b in types)
    assert seen == set(lattice_points(lam))
    for p in (2, 3):
        assert sum(orbit_size(a, lam, p) for a in enumerate_canonical(lam)) == p ** sum(lam)


@pytest.mark.parametrize("lam", exponent_tuples(7))
def test_orbit_partition_matches_split(lam):
    parts = orbit_partition(lam)
    assert set(parts) == set(enumerate_canonical(lam))
    if len(set(lam)) == len(lam):
        assert all(parts[a] == orbit_types(a, lam) for a in parts)


@pytest.mark.parametrize("lam", exponent_tuples(8))
def test_canonical_meet_join_closed(lam):
    canon = enumerate_canonical(lam)
    for a in canon:
        for b in canon:
            assert is_canonical(tuple_meet(a, b), lam)
            assert is_canonical(tuple_join(a, b), lam)


@st.composite
def lam_and_tuple(draw):
    lam = tuple(sorted(draw(st.lists(st.integers(1, 6), min_size=1, max_size=5))))
    a = tuple(draw(st.integers(0, x)) for x in lam)
    return lam, a


@given(lam_and_tuple())
def test_canonicalize_properties(case):
    lam, a = case
    c = canonicalize(a, lam)
    assert is_canonical(c, lam)
    assert canonicalize(c, lam) == c
    assert tuple_leq(a, c)


@given(lam_and_tuple())
def test_degeneracy_covers_coordinates(case):
    lam, a = case
    a = canonicalize(a, lam)
    d = degeneracy(a, lam)
    n = len(lam)
    assert set(d.degenerate_I) | set(d.degenerate_II) | set(d.nondegenerate) == set(range(1, n + 1))
    assert not set(d.nondegenerate) & (set(d.degenerate_I) | set(d.degenerate_II))
    assert n not in d.degenerate_II
    assert d.r == len(d.nondegenerate)


def test_count_is_product():
    for lam in exponent_tuples(10):
        assert count_orbits(lam) == math.prod(b - a + 1 for a, b in zip((0, *lam), lam))
