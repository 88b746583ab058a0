"""Finite abelian group descriptions.

A group is written as a product of cyclic factors ``Z_{n_1} x Z_{n_2} x ...``.
Composite orders are split into prime-power parts, and the result is grouped
by prime into weakly increasing exponent tuples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from sympy import factorint, isprime

__all__ = [
    "SignatureError",
    "GroupSignature",
    "PGroupSignature",
    "ReducedSignature",
    "parse_signature",
    "format_signature",
    "sylow_decompose",
    "reduce_duplicates",
    "group_order",
    "compose",
]


class SignatureError(ValueError):
    """Malformed or inadmissible group description."""


@dataclass(frozen=True)
class GroupSignature:
    """Multiset of prime-power cyclic orders, stored ascending."""

    factors: tuple[int, ...]

    def __post_init__(self):
        for f in self.factors:
            if f < 2 or len(factorint(f)) != 1:
                raise SignatureError(f"factor {f} is not a prime power")
        if list(self.factors) != sorted(self.factors):
            raise SignatureError("factors must be sorted ascending")

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    def __str__(self):
        return format_signature(self)


@dataclass(frozen=True)
class PGroupSignature:
    """``Z_{p^l1} x ... x Z_{p^ln}`` with ``l1 <= ... <= ln``; ``lam == ()`` is trivial."""

    p: int
    lam: tuple[int, ...]

    def __post_init__(self):
        if not isprime(self.p):
            raise SignatureError(f"{self.p} is not prime")
        if any(x < 1 for x in self.lam):
            raise SignatureError("exponents must be positive")
        if any(a > b for a, b in zip(self.lam, self.lam[1:])):
            raise SignatureError(f"exponents {self.lam} are not weakly increasing")

    @property
    def n(self) -> int:
        return len(self.lam)

    @property
    def is_reduced(self) -> bool:
        return all(a < b for a, b in zip(self.lam, self.lam[1:]))

    @property
    def moduli(self) -> tuple[int, ...]:
        return tuple(self.p**x for x in self.lam)

    def __str__(self):
        return ",".join(str(m) for m in self.moduli) or "1"


@dataclass(frozen=True)
class ReducedSignature(PGroupSignature):
    """A p-group signature with strictly increasing exponents."""

    def __post_init__(self):
        super().__post_init__()
        if not self.is_reduced:
            raise SignatureError(f"exponents {self.lam} are not strictly increasing")


def _prime_power_parts(n: int) -> list[int]:
    return [p**e for p, e in factorint(n).items()]


def parse_signature(text: str) -> GroupSignature:
    """Parse ``"12,9"`` into the normalized signature ``3,4,9``.

    Whitespace around tokens is ignored. Every token must be an integer >= 2.
    """
    tokens = text.replace(" ", "").replace("\t", "").split(",")
    factors: list[int] = []
    for tok in tokens:
        if not tok.isdigit():
            raise SignatureError(f"malformed factor {tok!r} in {text!r}")
        n = int(tok)
        if n < 2:
            raise SignatureError(f"cyclic order must be >= 2, got {n}")
        factors.extend(_prime_power_parts(n))
    return GroupSignature(tuple(sorted(factors)))


def format_signature(g: GroupSignature) -> str:
    return ",".join(str(f) for f in g.factors)


def sylow_decompose(g: GroupSignature) -> dict[int, PGroupSignature]:
    """Split ``g`` into its Sylow components, keyed by prime (ascending)."""
    parts: dict[int, list[int]] = {}
    for f in g.factors:
        ((p, e),) = factorint(f).items()
        parts.setdefault(p, []).append(e)
    return {p: PGroupSignature(p, tuple(sorted(es))) for p, es in sorted(parts.items())}


def compose(components: Iterable[PGroupSignature]) -> GroupSignature:
    """Inverse of :func:`sylow_decompose`."""
    factors = [m for s in components for m in s.moduli]
    return GroupSignature(tuple(sorted(factors)))


def reduce_duplicates(s: PGroupSignature) -> ReducedSignature:
    """Drop repeated exponents from an odd p-group signature.

    Repeated cyclic factors leave the characteristic-subgroup lattice unchanged
    when p is odd. For p = 2 the invariance is not established, so this refuses.
    """
    if s.p == 2:
        raise SignatureError("duplicate reduction is only valid for odd p")
    return ReducedSignature(s.p, tuple(sorted(set(s.lam))))


def group_order(s: PGroupSignature) -> int:
    return s.p ** sum(s.lam)
