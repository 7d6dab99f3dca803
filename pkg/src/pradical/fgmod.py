"""Finitely presented modules over Z and Z/n, and their prime submodules.

A module is ``M = Z^n / R`` for a relation lattice ``R``; over Z/n the
lattice always contains ``n Z^n``, so both rings share one kernel.  A
submodule is an intermediate lattice ``R ⊆ L ⊆ Z^n``.

Prime submodules of a finitely generated abelian group ``A = Z^n / L``
come in two kinds, and the closed forms below rest on them:

* ``(p)``-primes are exactly the ``P`` with ``pM ⊆ P ⊊ M`` (``M/P`` is then
  an F_p vector space, which is torsion-free over F_p).  Their intersection
  is ``pM + L``, since proper subspaces of ``A/pA`` meet in zero.
* ``(0)``-primes need ``Z^n/P`` torsion-free; the smallest one above ``L``
  is the saturation ``sat(L)``, and it exists iff ``A`` is infinite.

Intersecting everything (see ``docs/derivations.md``) gives
``rad(L) = L + rad(e) * sat(L)`` where ``e`` is the exponent of the torsion
part of ``A`` and ``rad(e)`` its squarefree kernel.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import prod
from typing import Iterable, Iterator, Sequence

from .certificate import PrimeCheck, PropertyCertificate
from .errors import PreconditionError, UnsupportedError
from .exactlin import IntegerLattice, IntMatrix, saturate, smith_decomposition
from .rings import (
    Z,
    ZMODN,
    IdealDescriptor,
    PrimeSet,
    RingDescriptor,
    ideal,
    is_prime_ideal,
    next_prime_not_in,
    prime_divisors,
    radical_ideal,
    squarefree_kernel,
    unit_ideal,
)

DEFAULT_BOUND = 20000


@dataclass(frozen=True)
class FinPresModule:
    ring: RingDescriptor
    n_gens: int
    relations: IntegerLattice

    def __post_init__(self):
        if self.ring.kind not in (Z, ZMODN):
            raise UnsupportedError(f"finitely presented modules over {self.ring} are not supported")
        if self.relations.ambient_rank != self.n_gens:
            raise ValueError("relation lattice lives in the wrong ambient rank")
        if self.ring.kind == ZMODN:
            n = self.ring.n
            for i in range(self.n_gens):
                if [n * int(i == j) for j in range(self.n_gens)] not in self.relations:
                    raise ValueError(f"relations must contain {n}*e_{i} over {self.ring}")

    @classmethod
    def from_relations(cls, ring: RingDescriptor, n_gens: int, relations: Iterable[Sequence[int]] = ()):
        gens = [list(map(int, r)) for r in relations]
        if ring.kind == ZMODN:
            gens += [[ring.n * int(i == j) for j in range(n_gens)] for i in range(n_gens)]
        return cls(ring, n_gens, IntegerLattice.from_generators(gens, n_gens))

    @classmethod
    def cyclic(cls, ring: RingDescriptor, order: int) -> FinPresModule:
        """R/(order) as a one-generator module (order 0 gives R itself)."""
        return cls.from_relations(ring, 1, [[order]] if order else [])

    @classmethod
    def direct_sum(cls, ring: RingDescriptor, orders: Sequence[int]) -> FinPresModule:
        """⊕ R/(d) over ``orders``; 0 stands for a free summand."""
        n = len(orders)
        rels = [[d * int(i == j) for j in range(n)] for i, d in enumerate(orders) if d]
        return cls.from_relations(ring, n, rels)

    # -- cached structure -------------------------------------------------

    @cached_property
    def smith(self):
        return smith_decomposition(self.relations.basis)

    @cached_property
    def invariant_factors(self) -> tuple[int, ...]:
        """Nontrivial torsion factors ``d_1 | d_2 | ...`` (all > 1)."""
        return tuple(d for d in self.smith.invariant_factors if d > 1)

    @property
    def free_rank(self) -> int:
        return self.n_gens - self.relations.rank

    @property
    def exponent(self) -> int:
        """Exponent of the torsion part (1 when torsion-free)."""
        return self.invariant_factors[-1] if self.invariant_factors else 1

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    @property
    def order(self) -> int | None:
        return prod(self.invariant_factors) if self.is_finite else None

    @property
    def is_zero(self) -> bool:
        return self.is_finite and not self.invariant_factors

    @property
    def is_cyclic(self) -> bool:
        return self.free_rank + len(self.invariant_factors) <= 1

    def structure(self) -> str:
        parts = [f"Z/{d}" for d in self.invariant_factors] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"

    # -- submodules -------------------------------------------------------

    def submodule(self, gens: Iterable[Sequence[int]] = ()) -> Submodule:
        gens = [list(map(int, g)) for g in gens]
        lat = IntegerLattice.from_generators(self.relations.generators() + gens, self.n_gens)
        return Submodule(self, lat)

    def zero(self) -> Submodule:
        return Submodule(self, self.relations)

    def whole(self) -> Submodule:
        return Submodule(self, IntegerLattice.ambient(self.n_gens))

    def scaled(self, g: int) -> Submodule:
        """The submodule ``gM``."""
        return Submodule(self, self.relations + IntegerLattice.ambient(self.n_gens).scaled(g))

    def ideal_times(self, i: IdealDescriptor) -> Submodule:
        _check_ring(self, i)
        return self.scaled(i.gen)

    def torsion(self) -> Submodule:
        return Submodule(self, saturate(self.relations))

    def __str__(self):
        return f"{self.structure()} over {self.ring}"


@dataclass(frozen=True)
class Submodule:
    parent: FinPresModule
    lattice: IntegerLattice

    def __post_init__(self):
        if not self.parent.relations <= self.lattice:
            raise ValueError("submodule lattice must contain the relation lattice")

    @cached_property
    def smith(self):
        return smith_decomposition(self.lattice.basis)

    @property
    def quotient_free_rank(self) -> int:
        return self.parent.n_gens - self.lattice.rank

    @cached_property
    def quotient_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.smith.invariant_factors if d > 1)

    @property
    def quotient_exponent(self) -> int:
        return self.quotient_factors[-1] if self.quotient_factors else 1

    @property
    def is_whole(self) -> bool:
        return self.lattice.rank == self.parent.n_gens and not self.quotient_factors

    def generators(self) -> list[list[int]]:
        return self.lattice.generators()

    def __le__(self, other: Submodule) -> bool:
        return self.lattice <= other.lattice

    def __add__(self, other: Submodule) -> Submodule:
        return Submodule(self.parent, self.lattice + other.lattice)

    def __and__(self, other: Submodule) -> Submodule:
        return Submodule(self.parent, self.lattice & other.lattice)

    def scaled(self, g: int) -> Submodule:
        return Submodule(self.parent, self.lattice.scaled(g) + self.parent.relations)

    def __str__(self):
        return "<" + ", ".join("(" + ",".join(map(str, g)) + ")" for g in self.generators()) + ">"


def _check_ring(m: FinPresModule, i: IdealDescriptor):
    if i.ring != m.ring:
        raise PreconditionError(f"ideal of {i.ring} used with a module over {m.ring}")


def _gens_tuple(n: Submodule) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(g) for g in n.generators())


# ---------------------------------------------------------------------------
# annihilators, colons, primes


def ann(m: FinPresModule) -> IdealDescriptor:
    return colon(m.zero())


def colon(n: Submodule) -> IdealDescriptor:
    """``(N:M)``: the exponent of ``M/N`` (zero when the quotient is infinite)."""
    if n.quotient_free_rank > 0:
        return ideal(n.parent.ring, 0)
    return ideal(n.parent.ring, n.quotient_exponent)


def is_prime_submodule(n: Submodule) -> tuple[bool, IdealDescriptor | None]:
    """Decide primality; on success also return the prime ``(N:M)``.

    ``(p)``-primes are the proper ``N`` with ``pM ⊆ N``; that inclusion is
    exactly ``(N:M) = (p)``.  A ``(0)``-prime needs a torsion-free quotient,
    i.e. a saturated lattice.
    """
    if n.is_whole:
        return False, None
    c = colon(n)
    if not is_prime_ideal(c):
        return False, None
    if n.quotient_free_rank > 0 and saturate(n.lattice) != n.lattice:
        return False, None
    return True, c


def prime_radical(n: Submodule) -> Submodule:
    """Intersection of all prime submodules containing ``n`` (``M`` if none)."""
    lat = n.lattice
    r = squarefree_kernel(n.quotient_exponent)
    if r == 1:
        sat = saturate(lat)
        return Submodule(n.parent, sat) if n.quotient_free_rank > 0 else n.parent.whole()
    return Submodule(n.parent, lat + saturate(lat).scaled(r))


def radical_of_ideal_times(m: FinPresModule, i: IdealDescriptor) -> Submodule:
    return prime_radical(m.ideal_times(i))


# ---------------------------------------------------------------------------
# primes above Ann(M) and the property checks


def primes_over_ann(m: FinPresModule) -> tuple[list[int], PrimeSet | None]:
    """Explicit prime generators above ``Ann(M)`` and the generic class.

    Over Z with ``Ann(M) = 0`` there are infinitely many maximal ideals
    above; all those not dividing the torsion exponent behave alike
    (``M/pM ≅ F_p^r``) and are returned as one cofinite class.
    """
    a = ann(m)
    if a.is_unit:
        return [], None
    if m.ring.kind == Z and a.gen == 0:
        explicit = prime_divisors(m.exponent)
        return [0, *explicit], PrimeSet.all_maximals(m.ring, explicit)
    return list(prime_divisors(a.gen)), None


def generic_representative(generic: PrimeSet) -> int:
    return next_prime_not_in(generic.excluded)


def _radical_colon_check(m: FinPresModule, g: int, prime, rep=None) -> PrimeCheck:
    P = ideal(m.ring, g)
    rad = prime_radical(m.scaled(g))
    c = colon(rad)
    holds = c == P
    rel = "=" if holds else "!="
    return PrimeCheck(
        prime, holds, f"(rad({g}M) : M) = {c} {rel} {P}", _gens_tuple(rad), rep
    )


def check_p_radical(m: FinPresModule) -> PropertyCertificate:
    explicit, generic = primes_over_ann(m)
    checks = [_radical_colon_check(m, g, ideal(m.ring, g)) for g in explicit]
    if generic is not None:
        q = generic_representative(generic)
        checks.append(_radical_colon_check(m, q, generic, q))
    return PropertyCertificate.from_checks("pradical", checks)


def _proper_scalar_check(m: FinPresModule, g: int, prime, rep=None) -> PrimeCheck:
    pm = m.scaled(g)
    holds = not pm.is_whole
    text = f"{g}M != M" if holds else f"{g}M = M"
    return PrimeCheck(prime, holds, text, _gens_tuple(pm) if holds else None, rep)


def check_m_radical(m: FinPresModule) -> PropertyCertificate:
    explicit, generic = primes_over_ann(m)
    checks = [_proper_scalar_check(m, g, ideal(m.ring, g)) for g in explicit if g != 0]
    if generic is not None:
        q = generic_representative(generic)
        checks.append(_proper_scalar_check(m, q, generic, q))
    return PropertyCertificate.from_checks("mradical", checks)


def _realizing_prime(m: FinPresModule, g: int) -> Submodule | None:
    cand = m.torsion() if g == 0 else m.scaled(g)
    ok, c = is_prime_submodule(cand)
    return cand if ok and c == ideal(m.ring, g) else None


def check_primeful(m: FinPresModule) -> PropertyCertificate:
    explicit, generic = primes_over_ann(m)
    checks = []
    for g in explicit:
        w = _realizing_prime(m, g)
        text = f"({g}) <- {w}" if w is not None else f"no ({g})-prime submodule"
        checks.append(PrimeCheck(ideal(m.ring, g), w is not None, text, _gens_tuple(w) if w else None))
    if generic is not None:
        q = generic_representative(generic)
        w = _realizing_prime(m, q)
        text = f"({q}) <- {w}" if w is not None else f"no ({q})-prime submodule"
        checks.append(PrimeCheck(generic, w is not None, text, _gens_tuple(w) if w else None, q))
    return PropertyCertificate.from_checks("primeful", checks)


def colon_equality(m: FinPresModule) -> PropertyCertificate:
    """``(PM:M) = P`` at every prime ``P ⊇ Ann(M)``."""
    explicit, generic = primes_over_ann(m)
    checks = []
    targets = [(g, ideal(m.ring, g), None) for g in explicit]
    if generic is not None:
        q = generic_representative(generic)
        targets.append((q, generic, q))
    for g, label, rep in targets:
        c = colon(m.scaled(g))
        holds = c == ideal(m.ring, g)
        checks.append(PrimeCheck(label, holds, f"({g}M : M) = {c}", None, rep))
    return PropertyCertificate.from_checks("colon", checks)


def maximal_submodule_over(m: FinPresModule, p: int) -> Submodule | None:
    """A maximal submodule with colon ``(p)``, or ``None`` when ``pM = M``."""
    pm = m.scaled(p)
    if pm.is_whole:
        return None
    dec = pm.smith
    factors = dec.invariant_factors
    n = m.n_gens
    i = next(t for t, d in enumerate(factors + [0] * (n - len(factors))) if d != 1)
    # keep every Smith coordinate except the i-th, which is forced into pZ
    diag = [p if t == i else 1 for t in range(n)]
    cols = (dec.left_inverse @ IntMatrix.diag(diag)).columns()
    return m.submodule(cols)


def is_multiplication(m: FinPresModule, bound: int = DEFAULT_BOUND) -> bool:
    """Every submodule is ``IM`` for an ideal ``I`` (decided for cyclic or finite M)."""
    if m.is_cyclic:
        return True
    if not m.is_finite:
        raise UnsupportedError("multiplication test needs a cyclic or finite module")
    return all(n == m.ideal_times(colon(n)) for n in enumerate_submodules(m, bound))


def check_radical_formula(m: FinPresModule, i: IdealDescriptor) -> bool:
    """``rad(IM) == sqrt(I) M``; requires ``I ⊇ Ann(M)``."""
    _check_ring(m, i)
    if not ann(m) <= i:
        raise PreconditionError(f"{i} does not contain Ann(M) = {ann(m)}")
    left = prime_radical(m.ideal_times(i))
    right = m.ideal_times(radical_ideal(m.ring, i))
    return left == right


def enumerate_submodules(m: FinPresModule, bound: int = DEFAULT_BOUND) -> Iterator[Submodule]:
    from .oracle import finite_oracle

    yield from finite_oracle(m, bound).submodules()


def prime_radical_oracle(n: Submodule, bound: int = DEFAULT_BOUND) -> Submodule:
    from .oracle import finite_oracle

    return finite_oracle(n.parent, bound).prime_radical(n)


def ideals_over_ann(m: FinPresModule) -> list[IdealDescriptor]:
    """All ideals containing ``Ann(M)`` for a finite module."""
    if not m.is_finite:
        raise PreconditionError("ideals over Ann(M) are only enumerable for finite modules")
    e = ann(m).gen
    return [ideal(m.ring, d) for d in _divisors(e)]


def _divisors(e: int) -> list[int]:
    from sympy import divisors

    return [int(d) for d in divisors(e)]


__all__ = [
    "FinPresModule",
    "Submodule",
    "ann",
    "colon",
    "is_prime_submodule",
    "prime_radical",
    "check_p_radical",
    "check_m_radical",
    "check_primeful",
    "colon_equality",
    "maximal_submodule_over",
    "is_multiplication",
    "check_radical_formula",
    "enumerate_submodules",
    "prime_radical_oracle",
    "ideals_over_ann",
    "primes_over_ann",
    "unit_ideal",
]
