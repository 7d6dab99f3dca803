"""Property evaluation shared by the command line and the gallery.

``analyze`` runs the requested predicates on either module representation
and returns rows in a fixed order, so text and JSON renderings are stable.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import fgmod, symmod
from .certificate import PropertyCertificate
from .errors import PreconditionError, UnsupportedError
from .fgmod import FinPresModule
from .rings import FP, Z, ZMODN, squarefree_kernel
from .spectop import psi_image

PROPERTIES = ("primeful", "pradical", "colon", "mradical", "fullsemisimple", "primeless", "multiplication")
DEFAULT_PROPERTIES = ("primeful", "pradical", "colon", "mradical", "fullsemisimple", "primeless")


@dataclass(frozen=True)
class Row:
    """One property: ``verdict`` is None when the property does not apply."""

    property: str
    verdict: bool | None
    certificate: PropertyCertificate | None = None
    note: str = ""

    @property
    def mark(self) -> str:
        return "n/a" if self.verdict is None else ("yes" if self.verdict else "no")


def _mod(m):
    return fgmod if isinstance(m, FinPresModule) else symmod


def fg_is_semisimple(m: FinPresModule) -> bool:
    """A finitely presented module is semisimple iff it is a finite sum of simples."""
    if m.is_zero or (not m.is_finite and m.ring.kind == Z):
        return False
    e = m.exponent if m.is_finite else m.ring.n
    return squarefree_kernel(e) == e


def is_primeless(m) -> bool:
    img = psi_image(m)
    return not img.cofinite and not img.members


def full_semisimple(m) -> bool:
    """Raises ``PreconditionError`` on a module that is not semisimple."""
    if isinstance(m, FinPresModule):
        if not fg_is_semisimple(m):
            raise PreconditionError("full semisimplicity needs a nonzero semisimple module")
        # Ann(M) is the product of the primes occurring, each giving a summand
        return True
    if m.is_zero:
        raise PreconditionError("full semisimplicity needs a nonzero semisimple module")
    return symmod.is_full_semisimple(m)


def property_row(m, prop: str, strict: bool = False) -> Row:
    """Evaluate one property; ``strict`` turns inapplicable ones into errors."""
    mod = _mod(m)
    if prop in ("primeful", "pradical", "mradical", "colon"):
        fn = {
            "primeful": mod.check_primeful,
            "pradical": mod.check_p_radical,
            "mradical": mod.check_m_radical,
            "colon": mod.colon_equality,
        }[prop]
        cert = fn(m)
        return Row(prop, cert.verdict, cert)
    if prop == "primeless":
        return Row(prop, is_primeless(m), note="zero module" if m.is_zero else "")
    try:
        if prop == "fullsemisimple":
            return Row(prop, full_semisimple(m))
        if prop == "multiplication":
            if not isinstance(m, FinPresModule):
                raise UnsupportedError("multiplication test needs a finitely presented module")
            return Row(prop, fgmod.is_multiplication(m))
    except (PreconditionError, UnsupportedError) as exc:
        if strict:
            raise UnsupportedError(f"{prop}: {exc}") from exc
        return Row(prop, None, note=str(exc))
    raise ValueError(f"unknown property {prop!r}")


def analyze(m, properties=None) -> list[Row]:
    """Rows for ``properties`` (default: all but multiplication)."""
    strict = properties is not None
    props = DEFAULT_PROPERTIES if properties is None else tuple(properties)
    bad = [p for p in props if p not in PROPERTIES]
    if bad:
        raise ValueError(f"unknown properties: {', '.join(bad)}")
    return [property_row(m, p, strict) for p in props]


def describe(m) -> str:
    if isinstance(m, FinPresModule):
        return f"{m.structure()} over {m.ring}"
    return str(m)


def ring_note(m) -> str:
    r = m.ring
    if r.kind == FP:
        return "vector space"
    if r.kind == ZMODN:
        return "zero-dimensional ring"
    return ""


__all__ = ["Row", "PROPERTIES", "DEFAULT_PROPERTIES", "analyze", "property_row", "full_semisimple", "is_primeless", "describe"]
