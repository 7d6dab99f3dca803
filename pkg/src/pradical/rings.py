"""The four supported coefficient rings, their ideals and prime spectra.

Supported rings:

* ``Z`` -- the integers,
* ``ZmodN(n)`` -- Z/nZ for n >= 2,
* ``ZlocP(p)`` -- Z localized at the prime p (only its ideal lattice is used),
* ``Fp(p)`` -- the prime field.

Every ideal of these rings is principal and is stored by a normalized
nonnegative generator, so ideal equality is generator equality.  Inclusion
of ideals is divisibility of generators in all four cases (with the
convention that every integer divides 0).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd, prod
from typing import Iterator

from sympy import factorint, isprime

Z, ZMODN, ZLOCP, FP = "Z", "ZmodN", "ZlocP", "Fp"
KINDS = (Z, ZMODN, ZLOCP, FP)


class RingError(ValueError):
    pass


@lru_cache(maxsize=4096)
def prime_divisors(g: int) -> tuple[int, ...]:
    """Sorted prime divisors of ``|g|`` (empty for 0 and ±1)."""
    g = abs(g)
    if g < 2:
        return ()
    return tuple(sorted(factorint(g)))


def squarefree_kernel(g: int) -> int:
    """Product of the distinct primes dividing g; 0 stays 0."""
    if g == 0:
        return 0
    return prod(prime_divisors(g))


def valuation(g: int, p: int) -> int:
    v = 0
    while g and g % p == 0:
        g //= p
        v += 1
    return v


def divides(a: int, b: int) -> bool:
    if a == 0:
        return b == 0
    return b % a == 0


def lcm(a: int, b: int) -> int:
    if a == 0 or b == 0:
        return 0
    return abs(a * b) // gcd(a, b)


def next_prime_not_in(excluded, start: int = 2) -> int:
    p = start
    while True:
        if isprime(p) and p not in excluded:
            return p
        p += 1


@dataclass(frozen=True)
class RingDescriptor:
    kind: str
    param: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise RingError(f"unknown ring kind {self.kind!r}")
        if self.kind == Z:
            if self.param != 0:
                raise RingError("the integers take no parameter")
        elif self.kind == ZMODN:
            if self.param < 2:
                raise RingError(f"Z/n needs n >= 2, got {self.param}")
        elif not isprime(self.param):
            raise RingError(f"{self.kind} needs a prime, got {self.param}")

    @property
    def n(self) -> int:
        return self.param

    @property
    def p(self) -> int:
        return self.param

    @property
    def is_domain(self) -> bool:
        return self.kind in (Z, ZLOCP, FP)

    def __str__(self):
        return {
            Z: "Z",
            ZMODN: f"Z/{self.param}",
            ZLOCP: f"Z_({self.param})",
            FP: f"F_{self.param}",
        }[self.kind]


def integers() -> RingDescriptor:
    return RingDescriptor(Z)


def zmod(n: int) -> RingDescriptor:
    return RingDescriptor(ZMODN, n)


def zloc(p: int) -> RingDescriptor:
    return RingDescriptor(ZLOCP, p)


def field_(p: int) -> RingDescriptor:
    return RingDescriptor(FP, p)


def normalize_gen(r: RingDescriptor, g: int) -> int:
    g = abs(int(g))
    if r.kind == Z:
        return g
    if r.kind == ZMODN:
        return gcd(g, r.n)
    if r.kind == ZLOCP:
        return 0 if g == 0 else r.p ** valuation(g, r.p)
    return 0 if g == 0 else 1


@dataclass(frozen=True)
class IdealDescriptor:
    ring: RingDescriptor
    gen: int

    def __post_init__(self):
        if normalize_gen(self.ring, self.gen) != self.gen:
            raise RingError(f"{self.gen} is not a normalized generator over {self.ring}")

    @property
    def is_unit(self) -> bool:
        return self.gen == 1

    @property
    def is_zero(self) -> bool:
        return self.gen == (self.ring.n if self.ring.kind == ZMODN else 0)

    def __le__(self, other: IdealDescriptor) -> bool:
        """Ideal inclusion ``self ⊆ other``."""
        _same_ring(self.ring, other.ring)
        return divides(other.gen, self.gen)

    def __str__(self):
        return f"({self.gen})"


def ideal(r: RingDescriptor, g: int) -> IdealDescriptor:
    return IdealDescriptor(r, normalize_gen(r, g))


def zero_ideal(r: RingDescriptor) -> IdealDescriptor:
    return ideal(r, 0)


def unit_ideal(r: RingDescriptor) -> IdealDescriptor:
    return ideal(r, 1)


def _same_ring(a: RingDescriptor, b: RingDescriptor):
    if a != b:
        raise RingError(f"ideal of {b} used where an ideal of {a} is expected")


def ideal_sum(i: IdealDescriptor, j: IdealDescriptor) -> IdealDescriptor:
    _same_ring(i.ring, j.ring)
    return ideal(i.ring, gcd(i.gen, j.gen))


def ideal_product(i: IdealDescriptor, j: IdealDescriptor) -> IdealDescriptor:
    _same_ring(i.ring, j.ring)
    return ideal(i.ring, i.gen * j.gen)


def ideal_intersection(i: IdealDescriptor, j: IdealDescriptor) -> IdealDescriptor:
    _same_ring(i.ring, j.ring)
    return ideal(i.ring, lcm(i.gen, j.gen))


def is_prime_ideal(i: IdealDescriptor) -> bool:
    r, g = i.ring, i.gen
    if r.kind == ZMODN:
        return isprime(g)
    if g == 0:
        return True
    return isprime(g) and (r.kind != ZLOCP or g == r.p)


def is_maximal_ideal(i: IdealDescriptor) -> bool:
    if not is_prime_ideal(i):
        return False
    return i.gen != 0 or i.ring.kind == FP


# ---------------------------------------------------------------------------
# Sets of prime ideals


@dataclass(frozen=True)
class PrimeSet:
    """A set of prime ideals of one ring, identified by their generators.

    Either finite (``members``; generator 0 stands for the zero ideal), or
    *cofinite*: every maximal ideal except those in ``excluded``, plus the
    zero ideal when ``0 in members``.  Cofinite sets only make sense over Z.
    """

    ring: RingDescriptor
    members: frozenset[int] = frozenset()
    cofinite: bool = False
    excluded: frozenset[int] = frozenset()

    def __post_init__(self):
        if self.cofinite:
            if self.ring.kind != Z:
                raise RingError("cofinite prime sets need infinitely many maximal ideals")
            if self.members - {0}:
                raise RingError("cofinite sets keep maximal members implicit")
            if 0 in self.excluded or not all(isprime(q) for q in self.excluded):
                raise RingError("excluded set must consist of maximal ideals")
        else:
            if self.excluded:
                raise RingError("finite prime sets have no exclusions")
            for g in self.members:
                if not is_prime_ideal(ideal(self.ring, g)) or normalize_gen(self.ring, g) != g:
                    raise RingError(f"({g}) is not a prime ideal of {self.ring}")

    @classmethod
    def finite(cls, r: RingDescriptor, gens=()) -> PrimeSet:
        return cls(r, frozenset(int(g) for g in gens))

    @classmethod
    def all_maximals(cls, r: RingDescriptor, excluded=()) -> PrimeSet:
        if r.kind == Z:
            return cls(r, frozenset(), True, frozenset(excluded))
        return cls(r, frozenset(maximal_gens(r)) - frozenset(excluded))

    @property
    def has_zero(self) -> bool:
        return 0 in self.members

    @property
    def is_finite(self) -> bool:
        return not self.cofinite

    def __contains__(self, g) -> bool:
        if isinstance(g, IdealDescriptor):
            g = g.gen
        if self.cofinite and g != 0:
            return g not in self.excluded
        return g in self.members

    def __iter__(self) -> Iterator[int]:
        if self.cofinite:
            raise RingError("cannot iterate a cofinite prime set")
        return iter(sorted(self.members))

    def maximal_part(self) -> PrimeSet:
        if self.cofinite:
            return PrimeSet(self.ring, frozenset(), True, self.excluded)
        return PrimeSet(self.ring, frozenset(g for g in self.members if is_maximal_ideal(ideal(self.ring, g))))

    def with_zero(self, flag: bool = True) -> PrimeSet:
        m = self.members | {0} if flag else self.members - {0}
        return PrimeSet(self.ring, m, self.cofinite, self.excluded)

    def union(self, other: PrimeSet) -> PrimeSet:
        _same_ring(self.ring, other.ring)
        if self.cofinite or other.cofinite:
            zero = {0} & (self.members | other.members)
            if self.cofinite and other.cofinite:
                exc = self.excluded & other.excluded
            elif self.cofinite:
                exc = self.excluded - other.members
            else:
                exc = other.excluded - self.members
            return PrimeSet(self.ring, frozenset(zero), True, frozenset(exc))
        return PrimeSet(self.ring, self.members | other.members)

    def intersection(self, other: PrimeSet) -> PrimeSet:
        _same_ring(self.ring, other.ring)
        zero = frozenset({0} & self.members & other.members)
        if self.cofinite and other.cofinite:
            return PrimeSet(self.ring, zero, True, self.excluded | other.excluded)
        if self.cofinite or other.cofinite:
            fin, cof = (other, self) if self.cofinite else (self, other)
            return PrimeSet(self.ring, frozenset(g for g in fin.members if g in cof))
        return PrimeSet(self.ring, self.members & other.members)

    def issubset(self, other: PrimeSet) -> bool:
        return self.intersection(other) == self

    def mentioned(self) -> frozenset[int]:
        """Maximal generators named explicitly (members or exclusions)."""
        return (self.members | self.excluded) - {0}

    def intersection_ideal(self) -> IdealDescriptor:
        """The ideal ⋂ P over the set (the unit ideal for the empty set)."""
        if self.cofinite:
            return zero_ideal(self.ring)
        out = unit_ideal(self.ring)
        for g in self.members:
            out = ideal_intersection(out, ideal(self.ring, g))
        return out

    def __str__(self):
        if self.cofinite:
            head = "(0), " if self.has_zero else ""
            if self.excluded:
                return "{" + head + "all maximal except " + ", ".join(f"({q})" for q in sorted(self.excluded)) + "}"
            return "{" + head + "all maximal}"
        return "{" + ", ".join(f"({g})" for g in sorted(self.members)) + "}"


def maximal_gens(r: RingDescriptor) -> tuple[int, ...]:
    """Generators of the maximal ideals when there are finitely many."""
    if r.kind == ZMODN:
        return prime_divisors(r.n)
    if r.kind == ZLOCP:
        return (r.p,)
    if r.kind == FP:
        return (0,)
    raise RingError("Z has infinitely many maximal ideals")


def spectrum(r: RingDescriptor) -> PrimeSet:
    if r.kind == Z:
        return PrimeSet.all_maximals(r).with_zero()
    if r.kind == ZLOCP:
        return PrimeSet.finite(r, (0, r.p))
    return PrimeSet.finite(r, maximal_gens(r))


def primes_containing(r: RingDescriptor, i: IdealDescriptor) -> PrimeSet:
    """V(I) as a prime set."""
    _same_ring(r, i.ring)
    if i.is_unit:
        return PrimeSet.finite(r)
    if r.kind == Z and i.gen == 0:
        return spectrum(r)
    if r.kind == Z:
        return PrimeSet.finite(r, prime_divisors(i.gen))
    if r.kind == ZMODN:
        return PrimeSet.finite(r, prime_divisors(i.gen))
    if r.kind == ZLOCP:
        return spectrum(r) if i.gen == 0 else PrimeSet.finite(r, (r.p,))
    return spectrum(r)


def maximal_ideals_containing(r: RingDescriptor, i: IdealDescriptor) -> PrimeSet:
    return primes_containing(r, i).maximal_part()


def radical_ideal(r: RingDescriptor, i: IdealDescriptor) -> IdealDescriptor:
    _same_ring(r, i.ring)
    if r.kind == ZMODN:
        return ideal(r, squarefree_kernel(i.gen))
    if i.gen == 0:
        return i
    return ideal(r, squarefree_kernel(i.gen))


def is_hilbert(r: RingDescriptor) -> bool:
    """Every prime is the intersection of the maximal ideals above it.

    Maximal ideals satisfy this trivially, so only the zero ideal of the
    one-dimensional domains needs checking.
    """
    spec = spectrum(r)
    for g in [0] if spec.has_zero else []:
        P = ideal(r, g)
        if is_maximal_ideal(P):
            continue
        if maximal_ideals_containing(r, P).intersection_ideal() != P:
            return False
    return True


@dataclass(frozen=True)
class RingFacts:
    krull_dim: int
    is_artinian: bool
    is_domain: bool
    is_field: bool
    jacobson_radical: IdealDescriptor = field(compare=True)


def ring_facts(r: RingDescriptor) -> RingFacts:
    if r.kind == Z:
        return RingFacts(1, False, True, False, zero_ideal(r))
    if r.kind == ZMODN:
        return RingFacts(0, True, isprime(r.n), isprime(r.n), ideal(r, squarefree_kernel(r.n)))
    if r.kind == ZLOCP:
        return RingFacts(1, False, True, False, ideal(r, r.p))
    return RingFacts(0, True, True, True, zero_ideal(r))


def quotient_dim(r: RingDescriptor, i: IdealDescriptor) -> int:
    """Krull dimension of R/I; -1 for the zero ring."""
    _same_ring(r, i.ring)
    if i.is_unit:
        return -1
    if r.kind in (Z, ZLOCP) and i.gen == 0:
        return 1
    return 0


def quotient_is_hilbert(r: RingDescriptor, i: IdealDescriptor) -> bool:
    """R/I is Hilbert iff every prime above I is an intersection of maximals above it."""
    _same_ring(r, i.ring)
    if i.is_unit:
        return True
    above = primes_containing(r, i)
    for g in [0] if above.has_zero else []:
        P = ideal(r, g)
        if is_maximal_ideal(P):
            continue
        if maximal_ideals_containing(r, P).intersection(above).intersection_ideal() != P:
            return False
    return True


def is_unit_element(r: RingDescriptor, f: int) -> bool:
    return ideal(r, f).is_unit
