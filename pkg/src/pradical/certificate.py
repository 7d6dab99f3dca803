"""Verdicts with per-prime evidence, shared by both module representations."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .rings import IdealDescriptor, PrimeSet

Prime = Union[IdealDescriptor, PrimeSet]


@dataclass(frozen=True)
class PrimeCheck:
    """Outcome of a property at one prime, or at a whole class of primes.

    ``prime`` is a single prime ideal, or a ``PrimeSet`` standing for a class
    of maximal ideals that all behave alike (then ``representative`` names
    the member that was actually evaluated).  ``witness_gens`` carries the
    generators of a realizing submodule when there is one.
    """

    prime: Prime
    holds: bool
    witness: str
    witness_gens: tuple[tuple[int, ...], ...] | None = None
    representative: int | None = None

    def label(self) -> str:
        if isinstance(self.prime, IdealDescriptor):
            return str(self.prime)
        rep = f" [rep ({self.representative})]" if self.representative is not None else ""
        return f"{self.prime}{rep}"


@dataclass(frozen=True)
class PropertyCertificate:
    property: str
    verdict: bool
    per_prime: tuple[PrimeCheck, ...] = field(default_factory=tuple)
    note: str = ""

    def __post_init__(self):
        if self.verdict != all(c.holds for c in self.per_prime):
            raise ValueError("verdict must be the conjunction of the per-prime statuses")

    @classmethod
    def from_checks(cls, prop: str, checks, note: str = "") -> PropertyCertificate:
        checks = tuple(checks)
        return cls(prop, all(c.holds for c in checks), checks, note)

    def __bool__(self):
        return self.verdict

    def failing(self) -> list[PrimeCheck]:
        return [c for c in self.per_prime if not c.holds]
