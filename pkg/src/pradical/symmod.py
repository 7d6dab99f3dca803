"""Symbolic direct sums: free, cyclic prime-power, Prüfer and simple families.

A ``SymbolicModule`` is a formal direct sum

    R^(r)  ⊕  ⊕ R/(p^k)  ⊕  ⊕_{q in S} R/(q)  ⊕  ⊕ Z(p^∞)

where ``r`` may be countably infinite and ``S`` may be a cofinite set of
primes, so modules that are not finitely generated get a finite
description.  Every predicate is decided componentwise:

* ``pM != M`` iff some component has ``p`` in its support: a free part, a
  cyclic ``p``-power, or a family containing ``p``.  Prüfer parts are
  divisible and never contribute.
* the colons realized by prime submodules are the maximal ``p`` with
  ``pM != M``, plus ``(0)`` exactly when a free part exists over a domain
  whose zero ideal is not maximal.  Without a free part ``M`` is torsion,
  so no nonzero quotient of it is torsion-free.
* ``(rad(PM) : M)`` is the intersection of the realized primes containing
  ``P``, because colons commute with intersections of submodules.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Union

from .certificate import PrimeCheck, PropertyCertificate
from .errors import PreconditionError, UnsupportedError
from .rings import (
    FP,
    Z,
    ZLOCP,
    ZMODN,
    IdealDescriptor,
    PrimeSet,
    RingDescriptor,
    ideal,
    ideal_intersection,
    is_hilbert,
    is_maximal_ideal,
    maximal_gens,
    next_prime_not_in,
    prime_divisors,
    primes_containing,
    quotient_dim,
    quotient_is_hilbert,
    squarefree_kernel,
    unit_ideal,
    valuation,
    zero_ideal,
)
from sympy import isprime

COUNTABLE = "countable"
FreeRank = Union[int, str]


@dataclass(frozen=True)
class Cyclic:
    p: int
    k: int = 1
    mult: int = 1


@dataclass(frozen=True)
class Family:
    """One copy of ``R/(q)`` for every maximal ``(q)`` in ``primes``."""

    primes: PrimeSet


@dataclass(frozen=True)
class Pruefer:
    p: int
    mult: int = 1


@dataclass(frozen=True)
class SymbolicModule:
    ring: RingDescriptor
    free_rank: FreeRank = 0
    cyclics: tuple[Cyclic, ...] = ()
    families: tuple[Family, ...] = ()
    pruefer: tuple[Pruefer, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "cyclics", tuple(self.cyclics))
        object.__setattr__(self, "families", tuple(self.families))
        object.__setattr__(self, "pruefer", tuple(self.pruefer))
        r = self.ring
        if self.free_rank != COUNTABLE and (not isinstance(self.free_rank, int) or self.free_rank < 0):
            raise ValueError(f"free_rank must be a count or {COUNTABLE!r}")
        if r.kind == FP and (self.cyclics or self.families or self.pruefer):
            raise UnsupportedError("over a field only free parts are allowed")
        for c in self.cyclics:
            if c.k < 1 or c.mult < 1:
                raise ValueError("cyclic parts need exponent and multiplicity >= 1")
            if not isprime(c.p):
                raise ValueError(f"{c.p} is not prime")
            if r.kind == ZMODN and valuation(r.n, c.p) < c.k:
                raise UnsupportedError(f"Z/{c.p}^{c.k} is not a module over {r}")
            if r.kind == ZLOCP and c.p != r.p:
                raise UnsupportedError(f"({c.p}) is not a maximal ideal of {r}")
        for f in self.families:
            if f.primes.ring != r:
                raise ValueError("family prime set belongs to another ring")
            if f.primes.has_zero:
                raise ValueError("families range over maximal ideals only")
        for q in self.pruefer:
            if q.mult < 1 or not isprime(q.p):
                raise ValueError("Prüfer parts need a prime and multiplicity >= 1")
            if r.kind not in (Z, ZLOCP):
                raise UnsupportedError(f"Prüfer groups are not modules over {r}")
            if r.kind == ZLOCP and q.p != r.p:
                raise UnsupportedError(f"Z({q.p}^inf) is not a module over {r}")

    # -- basic shape ------------------------------------------------------

    @property
    def has_free(self) -> bool:
        return self.free_rank == COUNTABLE or self.free_rank > 0

    @property
    def live_families(self) -> tuple[Family, ...]:
        return tuple(f for f in self.families if f.primes.cofinite or f.primes.members)

    @property
    def is_zero(self) -> bool:
        return not (self.has_free or self.cyclics or self.live_families or self.pruefer)

    def mentioned_primes(self) -> frozenset[int]:
        out = {c.p for c in self.cyclics} | {q.p for q in self.pruefer}
        for f in self.families:
            out |= f.primes.mentioned()
        return frozenset(out)

    def __str__(self):
        parts = []
        if self.has_free:
            parts.append(f"{self.ring}^{'(inf)' if self.free_rank == COUNTABLE else self.free_rank}")
        for c in self.cyclics:
            s = f"R/({c.p}^{c.k})" if c.k > 1 else f"R/({c.p})"
            parts.append(s + (f"^{c.mult}" if c.mult > 1 else ""))
        for f in self.families:
            parts.append(f"sum R/(q), q in {f.primes}")
        for q in self.pruefer:
            parts.append(f"Z({q.p}^inf)" + (f"^{q.mult}" if q.mult > 1 else ""))
        return (" + ".join(parts) if parts else "0") + f" over {self.ring}"


# ---------------------------------------------------------------------------
# componentwise rules


def ann(m: SymbolicModule) -> IdealDescriptor:
    r = m.ring
    if m.has_free or m.pruefer or any(f.primes.cofinite for f in m.families):
        return zero_ideal(r)
    out = unit_ideal(r)
    for c in m.cyclics:
        out = ideal_intersection(out, ideal(r, c.p ** c.k))
    for f in m.families:
        for q in f.primes:
            out = ideal_intersection(out, ideal(r, q))
    return out


def scalar_image_proper(m: SymbolicModule, p: int | IdealDescriptor) -> bool:
    """Decide ``pM != M`` for a maximal ideal ``(p)``."""
    g = p.gen if isinstance(p, IdealDescriptor) else int(p)
    if not is_maximal_ideal(ideal(m.ring, g)):
        raise PreconditionError(f"({g}) is not a maximal ideal of {m.ring}")
    if m.has_free:
        return True
    if any(c.p == g for c in m.cyclics):
        return True
    return any(g in f.primes for f in m.families)


def scales_onto(m: SymbolicModule, i: int | IdealDescriptor) -> bool:
    """Decide ``IM = M``: for ``I = (g)``, ``gM = M`` iff ``pM = M`` for every prime ``p | g``."""
    g = i.gen if isinstance(i, IdealDescriptor) else ideal(m.ring, int(i)).gen
    r = m.ring
    if ideal(r, g).is_unit:
        return True
    if g == 0 or (r.kind == FP):
        return m.is_zero
    if r.kind == ZMODN and g == r.n:
        return m.is_zero
    return all(not scalar_image_proper(m, p) for p in prime_divisors(g))


def realized_colons(m: SymbolicModule) -> PrimeSet:
    """The primes ``(P:M)`` as ``P`` runs over the prime submodules."""
    r = m.ring
    zero = m.has_free and r.kind in (Z, ZLOCP)
    if r.kind == Z:
        if m.has_free or any(f.primes.cofinite for f in m.families):
            cof = [f.primes for f in m.families if f.primes.cofinite]
            if m.has_free:
                maxes = PrimeSet.all_maximals(r)
            else:
                maxes = cof[0]
                for s in cof[1:]:
                    maxes = maxes.union(s)
                for c in m.cyclics:
                    maxes = maxes.union(PrimeSet.finite(r, [c.p]))
                for f in m.families:
                    maxes = maxes.union(f.primes)
            return maxes.with_zero() if zero else maxes
        gens = {c.p for c in m.cyclics}
        for f in m.families:
            gens |= f.primes.members
        return PrimeSet.finite(r, gens | ({0} if zero else set()))
    gens = {g for g in maximal_gens(r) if scalar_image_proper(m, g)}
    return PrimeSet.finite(r, gens | ({0} if zero else set()))


def spectrum_is_empty(m: SymbolicModule) -> bool:
    rc = realized_colons(m)
    return not rc.cofinite and not rc.members


def is_primeless(m: SymbolicModule) -> bool:
    """No prime submodules at all (true for the zero module and for torsion divisible modules)."""
    return spectrum_is_empty(m)


def radical_colon(m: SymbolicModule, P: int | IdealDescriptor) -> IdealDescriptor:
    """``(rad(PM) : M)`` for a prime ``P``; the unit ideal if ``PM`` lies in no prime."""
    r = m.ring
    g = P.gen if isinstance(P, IdealDescriptor) else int(P)
    P = ideal(r, g)
    if is_maximal_ideal(P):
        return P if scalar_image_proper(m, g) else unit_ideal(r)
    # the zero ideal of Z or Z_(p): every prime submodule contains 0 = PM
    rc = realized_colons(m)
    if rc.has_zero:
        return zero_ideal(r)
    return rc.intersection_ideal()


class Target(NamedTuple):
    label: Union[IdealDescriptor, PrimeSet]
    gen: int
    representative: int | None


def prime_targets(m: SymbolicModule, maximal_only: bool = False) -> list[Target]:
    """Primes over ``Ann(M)``: explicit ones, then one class for the rest.

    When ``V(Ann(M))`` is infinite (over Z with zero annihilator), the
    maximal ideals not named by any component behave identically, so one
    representative stands for the whole cofinite class.
    """
    r = m.ring
    above = primes_containing(r, ann(m))
    if above.cofinite:
        mentioned = sorted(m.mentioned_primes())
        out = [] if maximal_only else [Target(ideal(r, 0), 0, None)]
        out += [Target(ideal(r, q), q, None) for q in mentioned]
        q = next_prime_not_in(mentioned)
        out.append(Target(PrimeSet.all_maximals(r, mentioned), q, q))
        return out
    out = []
    for g in above:
        P = ideal(r, g)
        if maximal_only and not is_maximal_ideal(P):
            continue
        out.append(Target(P, g, None))
    return out


def check_m_radical(m: SymbolicModule) -> PropertyCertificate:
    checks = []
    for t in prime_targets(m, maximal_only=True):
        ok = scalar_image_proper(m, t.gen)
        text = f"{t.gen}M != M" if ok else f"{t.gen}M = M"
        checks.append(PrimeCheck(t.label, ok, text, None, t.representative))
    return PropertyCertificate.from_checks("mradical", checks)


def check_p_radical(m: SymbolicModule) -> PropertyCertificate:
    checks = []
    for t in prime_targets(m):
        c = radical_colon(m, t.gen)
        ok = c == ideal(m.ring, t.gen)
        rel = "=" if ok else "!="
        text = f"(rad({t.gen}M) : M) = {c} {rel} ({t.gen})"
        checks.append(PrimeCheck(t.label, ok, text, None, t.representative))
    return PropertyCertificate.from_checks("pradical", checks)


def _realizer(m: SymbolicModule, g: int) -> str | None:
    if g == 0 and not is_maximal_ideal(ideal(m.ring, 0)):
        return "torsion part (quotient is free)" if m.has_free else None
    return f"{g}M" if scalar_image_proper(m, g) else None


def check_primeful(m: SymbolicModule) -> PropertyCertificate:
    checks = []
    for t in prime_targets(m):
        w = _realizer(m, t.gen)
        text = f"({t.gen}) <- {w}" if w else f"no ({t.gen})-prime submodule"
        checks.append(PrimeCheck(t.label, w is not None, text, None, t.representative))
    return PropertyCertificate.from_checks("primeful", checks)


def colon_equality(m: SymbolicModule) -> PropertyCertificate:
    """``(PM:M) = P`` at every prime over ``Ann(M)``.

    At a maximal ``p`` this is ``pM != M``.  At ``(0)`` it asks for a
    faithful module, which holds whenever ``(0)`` lies over ``Ann(M)``.
    """
    checks = []
    for t in prime_targets(m):
        P = ideal(m.ring, t.gen)
        if is_maximal_ideal(P):
            ok = scalar_image_proper(m, t.gen)
        else:
            ok = ann(m) == P
        checks.append(PrimeCheck(t.label, ok, f"({t.gen}M : M) {'=' if ok else '!='} ({t.gen})", None, t.representative))
    return PropertyCertificate.from_checks("colon", checks)


def maximal_submodule_witness(m: SymbolicModule, p: int) -> str | None:
    """Describe a maximal submodule with colon ``(p)``, or ``None`` if there is none."""
    if not scalar_image_proper(m, p):
        return None
    for c in m.cyclics:
        if c.p == p:
            return f"M with one R/({p}^{c.k}) summand replaced by ({p})R/({p}^{c.k})"
    for f in m.families:
        if p in f.primes:
            return f"M with the R/({p}) summand removed"
    return f"M with one free coordinate replaced by {p}R"


# ---------------------------------------------------------------------------
# semisimple modules


@dataclass(frozen=True)
class SemisimpleView:
    """Which simple modules ``R/m`` occur in a semisimple module."""

    ring: RingDescriptor
    types: PrimeSet


def semisimple_view(m: SymbolicModule) -> SemisimpleView | None:
    r = m.ring
    if m.pruefer or any(c.k > 1 for c in m.cyclics):
        return None
    types = PrimeSet.finite(r, [c.p for c in m.cyclics])
    for f in m.families:
        types = types.union(f.primes)
    if m.has_free:
        if r.kind == FP:
            types = types.union(PrimeSet.finite(r, [0]))
        elif r.kind == ZMODN and squarefree_kernel(r.n) == r.n:
            types = types.union(PrimeSet.finite(r, maximal_gens(r)))
        else:
            return None
    return SemisimpleView(r, types)


def is_semisimple(m: SymbolicModule) -> bool:
    return semisimple_view(m) is not None


def is_full_semisimple(m: SymbolicModule) -> bool:
    view = semisimple_view(m)
    if view is None:
        raise PreconditionError("full semisimplicity needs a semisimple module")
    over = primes_containing(m.ring, ann(m)).maximal_part()
    return over.issubset(view.types)


def is_homogeneous_semisimple(m: SymbolicModule) -> bool:
    return is_semisimple(m) and is_maximal_ideal(ann(m))


def is_prime_module(m: SymbolicModule) -> bool:
    """Is the zero submodule prime?  Needs ``Ann(M)`` prime and ``M`` torsion-free over ``R/Ann(M)``."""
    if m.is_zero:
        return False
    a = ann(m)
    if is_maximal_ideal(a):
        return True
    if a.gen == 0 and m.ring.kind in (Z, ZLOCP):
        return not (m.cyclics or m.live_families or m.pruefer)
    return False


def annihilator_quotient_dim(m: SymbolicModule) -> int:
    return quotient_dim(m.ring, ann(m))


def annihilator_quotient_is_hilbert(m: SymbolicModule) -> bool:
    return quotient_is_hilbert(m.ring, ann(m))


# ---------------------------------------------------------------------------
# constructions


def simple_family_module(ring: RingDescriptor, excluded=()) -> SymbolicModule:
    """``⊕ R/(q)`` over every maximal ideal except ``excluded``."""
    return SymbolicModule(ring, families=(Family(PrimeSet.all_maximals(ring, excluded)),))


def construct_prop27(ring: RingDescriptor) -> SymbolicModule:
    """A module that is radical at every prime yet not primeful.

    It needs a prime equal to the intersection of the primes strictly
    above it; over Z that is ``(0)``, and the module is the direct sum of
    all ``Z/(q)``.
    """
    if ring.kind != Z:
        raise PreconditionError(f"{ring} has no prime that is an intersection of strictly larger primes")
    return simple_family_module(ring)


def construct_thm211(ring: RingDescriptor) -> SymbolicModule:
    """Over a non-Hilbert ``Z_(p)``: ``F_p ⊕ Z(p^∞)``, maximal-radical but not prime-radical."""
    if is_hilbert(ring):
        raise PreconditionError(f"{ring} is a Hilbert ring")
    return SymbolicModule(ring, cyclics=(Cyclic(ring.p, 1),), pruefer=(Pruefer(ring.p),))


def pruefer_module(ring: RingDescriptor, p: int) -> SymbolicModule:
    return SymbolicModule(ring, pruefer=(Pruefer(p),))


class Truncation(NamedTuple):
    module: object
    pruefer_gap: bool


def truncate(m: SymbolicModule, prime_bound: int, rank_cap: int) -> Truncation:
    """A finite presentation approximating ``m`` (see ``docs/derivations.md``).

    Components with primes above ``prime_bound`` are dropped, families are
    expanded over their members up to the bound, free rank and
    multiplicities are capped at ``rank_cap``, and each Prüfer part becomes
    ``Z/p^rank_cap``.  The last step changes the module: ``pruefer_gap`` is
    set whenever it happened, and such truncations must not be used to
    reason about divisibility.
    """
    from .fgmod import FinPresModule

    r = m.ring
    if r.kind not in (Z, ZMODN):
        raise UnsupportedError(f"cannot truncate a module over {r}")
    orders: list[int] = []
    free = rank_cap if m.free_rank == COUNTABLE else min(m.free_rank, rank_cap)
    orders += [0] * free
    for c in m.cyclics:
        if c.p <= prime_bound:
            orders += [c.p ** c.k] * min(c.mult, rank_cap)
    for f in m.families:
        for q in range(2, prime_bound + 1):
            if isprime(q) and q in f.primes:
                orders.append(q)
    gap = False
    for q in m.pruefer:
        if q.p <= prime_bound:
            orders += [q.p ** rank_cap] * min(q.mult, rank_cap)
            gap = True
    return Truncation(FinPresModule.direct_sum(r, orders), gap)


__all__ = [
    "COUNTABLE",
    "Cyclic",
    "Family",
    "Pruefer",
    "SymbolicModule",
    "SemisimpleView",
    "Truncation",
    "ann",
    "scalar_image_proper",
    "realized_colons",
    "scales_onto",
    "is_primeless",
    "radical_colon",
    "prime_targets",
    "check_m_radical",
    "check_p_radical",
    "check_primeful",
    "colon_equality",
    "maximal_submodule_witness",
    "semisimple_view",
    "is_semisimple",
    "is_full_semisimple",
    "is_homogeneous_semisimple",
    "is_prime_module",
    "construct_prop27",
    "construct_thm211",
    "simple_family_module",
    "pruefer_module",
    "truncate",
]
