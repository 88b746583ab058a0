"""Characteristic subgroups of finite abelian groups.

Automorphism orbits, the lattice of characteristic subgroups (regular and, for
p = 2, irregular), closed-form counts, a lattice-isomorphism decision
procedure and a brute-force oracle for small groups.
"""

from __future__ import annotations

from .charlattice import (
    CharSubgroup,
    canonical_lattice,
    char_lattice,
    char_lattice_2,
    char_lattice_odd,
    char_subgroups_below,
    count_char_subgroups,
    count_projection_surjective,
    gaussian_binomial_2,
    regular_subgroup,
    unique_atom,
)
from .isodecide import decide_general, decide_odd_p, has_irregular, is_chain_group, is_distributive_char
from .latticecore import CapExceeded, FiniteLattice, LatticeError, is_isomorphic
from .orbits import (
    canonicalize,
    count_orbits,
    degeneracy,
    enumerate_canonical,
    is_canonical,
    orbit_size,
    orbit_types,
)
from .signature import (
    GroupSignature,
    PGroupSignature,
    ReducedSignature,
    SignatureError,
    parse_signature,
    sylow_decompose,
)

__version__ = "0.1.0"
