"""Zariski closed sets on Spec(R), closed sets on Spec(M), and the map
``P -> (P:M)`` from prime submodules to prime ideals.

Over the four supported rings every closed subset of Spec(R) is the whole
space, the empty set, or a finite set of maximal ideals, so a closed set is
stored in exactly one of those three shapes and equality is structural.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import PreconditionError
from .fgmod import FinPresModule, Submodule
from .fgmod import ann as fg_ann
from .fgmod import colon as fg_colon
from .rings import (
    FP,
    Z,
    ZLOCP,
    IdealDescriptor,
    PrimeSet,
    RingDescriptor,
    ideal,
    is_maximal_ideal,
    maximal_gens,
    prime_divisors,
    primes_containing,
    radical_ideal,
    spectrum,
)
from . import symmod

WHOLE = "whole"
EMPTY = "empty"
FINITE = "finite"


def _same_ring(a: RingDescriptor, b: RingDescriptor):
    if a != b:
        raise PreconditionError(f"closed sets over different rings: {a} vs {b}")


@dataclass(frozen=True)
class ClosedSetR:
    ring: RingDescriptor
    variant: str
    maximals: frozenset[int] = frozenset()

    def __post_init__(self):
        if self.variant not in (WHOLE, EMPTY, FINITE):
            raise ValueError(f"unknown variant {self.variant!r}")
        if self.variant != FINITE and self.maximals:
            raise ValueError("only finite closed sets list members")
        if self.variant == FINITE:
            if not self.maximals:
                raise ValueError("use the empty variant for no members")
            for g in self.maximals:
                if not is_maximal_ideal(ideal(self.ring, g)):
                    raise ValueError(f"({g}) is not maximal in {self.ring}")
            if _covers_spectrum(self.ring, self.maximals):
                raise ValueError("use the whole variant for the full spectrum")

    @classmethod
    def of(cls, ring: RingDescriptor, maximals=(), whole: bool = False) -> ClosedSetR:
        """Canonical closed set from a set of maximal generators."""
        ms = frozenset(int(g) for g in maximals)
        if whole or _covers_spectrum(ring, ms):
            return cls(ring, WHOLE)
        if not ms:
            return cls(ring, EMPTY)
        return cls(ring, FINITE, ms)

    @classmethod
    def whole(cls, ring):
        return cls(ring, WHOLE)

    @classmethod
    def empty(cls, ring):
        return cls(ring, EMPTY)

    def __contains__(self, P) -> bool:
        g = P.gen if isinstance(P, IdealDescriptor) else int(P)
        if self.variant == WHOLE:
            return g in spectrum(self.ring)
        return g in self.maximals

    def union(self, other: ClosedSetR) -> ClosedSetR:
        _same_ring(self.ring, other.ring)
        if WHOLE in (self.variant, other.variant):
            return ClosedSetR.whole(self.ring)
        return ClosedSetR.of(self.ring, self.maximals | other.maximals)

    def intersection(self, other: ClosedSetR) -> ClosedSetR:
        _same_ring(self.ring, other.ring)
        if self.variant == WHOLE:
            return other
        if other.variant == WHOLE:
            return self
        return ClosedSetR.of(self.ring, self.maximals & other.maximals)

    def issubset(self, other: ClosedSetR) -> bool:
        _same_ring(self.ring, other.ring)
        return self.intersection(other) == self

    __or__ = union
    __and__ = intersection
    __le__ = issubset

    def as_prime_set(self) -> PrimeSet:
        if self.variant == WHOLE:
            return spectrum(self.ring)
        return PrimeSet.finite(self.ring, self.maximals)

    def render(self) -> str:
        if self.variant in (WHOLE, EMPTY):
            return self.variant
        return ",".join(f"({g})" for g in sorted(self.maximals))

    def __str__(self):
        return self.render()


def _covers_spectrum(ring: RingDescriptor, ms: frozenset[int]) -> bool:
    # only rings whose spectrum is a finite set of maximal ideals can be
    # exhausted by a finite set
    if ring.kind in (Z, ZLOCP):
        return False
    return ms >= frozenset(maximal_gens(ring))


@dataclass(frozen=True)
class OpenSetR:
    """The complement of a closed set."""

    complement: ClosedSetR

    def __contains__(self, P) -> bool:
        return P not in self.complement

    @property
    def is_empty(self) -> bool:
        return self.complement.variant == WHOLE

    @property
    def is_whole(self) -> bool:
        return self.complement.variant == EMPTY

    def render(self) -> str:
        c = self.complement
        if c.variant == WHOLE:
            return EMPTY
        if c.variant == EMPTY:
            return WHOLE
        return "whole minus " + c.render()


def v_ideal(r: RingDescriptor, i: IdealDescriptor) -> ClosedSetR:
    """``V(I)``: the primes containing ``I``."""
    _same_ring(r, i.ring)
    if i.is_unit:
        return ClosedSetR.empty(r)
    if r.kind in (Z, ZLOCP) and i.gen == 0:
        return ClosedSetR.whole(r)
    if r.kind == FP:
        return ClosedSetR.whole(r)
    return ClosedSetR.of(r, prime_divisors(i.gen))


def d_basic(r: RingDescriptor, f: int) -> OpenSetR:
    """``D(f)``: the primes not containing ``f``."""
    return OpenSetR(v_ideal(r, ideal(r, f)))


# ---------------------------------------------------------------------------
# closed sets of Spec(M)

Module = Union[FinPresModule, "symmod.SymbolicModule"]


@dataclass(frozen=True)
class ClosedSetM:
    """``V(N)`` stored through the radical ideal ``J = sqrt((N:M))``.

    A prime submodule ``P`` belongs to it iff ``J ⊆ (P:M)``.  Two different
    ``J`` may cut out the same set of prime submodules when some primes of
    ``V(J)`` are not colons of any prime submodule; ``prime_ideals`` lets the
    caller choose whether to list those unrealized primes.
    """

    module: object
    radical: IdealDescriptor

    def contains_colon(self, c: IdealDescriptor) -> bool:
        return self.radical <= c

    def __contains__(self, p: Submodule) -> bool:
        if not isinstance(p, Submodule):
            raise TypeError("membership is tested on submodules")
        return self.contains_colon(fg_colon(p))

    def members(self, primes) -> list:
        """Filter ``(submodule, colon)`` pairs down to the ones in this set."""
        return [(p, c) for p, c in primes if self.contains_colon(c)]

    def prime_ideals(self, realized_only: bool = True) -> PrimeSet:
        v = primes_containing(self.radical.ring, self.radical)
        return v.intersection(psi_image(self.module)) if realized_only else v


def v_submodule(n) -> ClosedSetM:
    """``V(N)``; a symbolic module stands for its zero submodule."""
    if isinstance(n, Submodule):
        c = fg_colon(n)
        return ClosedSetM(n.parent, radical_ideal(c.ring, c))
    if isinstance(n, symmod.SymbolicModule):
        a = symmod.ann(n)
        return ClosedSetM(n, radical_ideal(a.ring, a))
    raise TypeError(f"cannot form V() of {type(n).__name__}")


def module_ann(m) -> IdealDescriptor:
    return fg_ann(m) if isinstance(m, FinPresModule) else symmod.ann(m)


def psi_image(m) -> PrimeSet:
    """Colons of the prime submodules: the image of ``P -> (P:M)``."""
    if isinstance(m, symmod.SymbolicModule):
        return symmod.realized_colons(m)
    r = m.ring
    if m.is_zero:
        return PrimeSet.finite(r)
    if not m.is_finite:
        # M = Z^r ⊕ T with r > 0: pM != M for every p, and T is a (0)-prime
        return PrimeSet.all_maximals(r).with_zero()
    gens = [g for g in prime_divisors(m.exponent) if not m.scaled(g).is_whole]
    return PrimeSet.finite(r, [ideal(r, g).gen for g in gens])


def psi_surjective(m) -> bool:
    a = module_ann(m)
    return psi_image(m) == primes_containing(a.ring, a)


def psi_dot(m: FinPresModule, bound: int = 20000) -> str:
    """Graphviz description of ``P -> (P:M)`` for a finite module."""
    from .oracle import finite_oracle

    oracle = finite_oracle(m, bound)
    lines = ["digraph psi {", "  rankdir=LR;"]
    targets = set()
    for i, (p, c) in enumerate(oracle.primes()):
        lines.append(f'  s{i} [shape=box,label="{p}"];')
        lines.append(f'  s{i} -> "{c}";')
        targets.add(str(c))
    a = module_ann(m)
    for g in primes_containing(a.ring, a):
        label = str(ideal(m.ring, g))
        if label not in targets:
            lines.append(f'  "{label}" [style=dashed];')
    lines.append("}")
    return "\n".join(lines)


__all__ = [
    "ClosedSetR",
    "OpenSetR",
    "ClosedSetM",
    "v_ideal",
    "d_basic",
    "v_submodule",
    "psi_image",
    "psi_surjective",
    "psi_dot",
    "module_ann",
]
