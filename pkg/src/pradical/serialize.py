"""JSON forms of rings, ideals, modules, submodules and certificates.

Numbers are written as decimal strings so that big integers survive any
JSON reader; on input both strings and plain integers are accepted.
"""
from __future__ import annotations

from typing import Any

from .certificate import PrimeCheck, PropertyCertificate
from .errors import ParseError
from .exactlin import IntegerLattice
from .fgmod import FinPresModule, Submodule
from .rings import FP, Z, ZLOCP, ZMODN, IdealDescriptor, PrimeSet, RingDescriptor, ideal, RingError
from .symmod import COUNTABLE, Cyclic, Family, Pruefer, SymbolicModule

_KIND_NAMES = {Z: "Z", ZMODN: "ZmodN", ZLOCP: "ZlocP", FP: "Fp"}
_KIND_FROM = {v: k for k, v in _KIND_NAMES.items()}


def num(x: int) -> str:
    return str(int(x))


def parse_int(value: Any, where: str) -> int:
    if isinstance(value, bool):
        raise ParseError(f"{where}: expected an integer, got a boolean")
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        try:
            return int(value.strip(), 10)
        except ValueError:
            pass
    raise ParseError(f"{where}: expected an integer, got {value!r}")


def _field(obj: dict, key: str, where: str):
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object")
    if key not in obj:
        raise ParseError(f"{where}.{key}: missing")
    return obj[key]


# -- rings and ideals -------------------------------------------------------


def ring_to_json(r: RingDescriptor) -> dict:
    out: dict = {"kind": _KIND_NAMES[r.kind]}
    if r.kind == ZMODN:
        out["n"] = num(r.n)
    elif r.kind in (ZLOCP, FP):
        out["p"] = num(r.p)
    return out


def ring_from_json(obj: Any, where: str = "ring") -> RingDescriptor:
    kind = _field(obj, "kind", where)
    if kind not in _KIND_FROM:
        raise ParseError(f"{where}.kind: unknown ring kind {kind!r}")
    k = _KIND_FROM[kind]
    try:
        if k == ZMODN:
            return RingDescriptor(k, parse_int(_field(obj, "n", where), f"{where}.n"))
        if k in (ZLOCP, FP):
            return RingDescriptor(k, parse_int(_field(obj, "p", where), f"{where}.p"))
        return RingDescriptor(k)
    except RingError as exc:
        raise ParseError(f"{where}: {exc}") from exc


def ideal_to_json(i: IdealDescriptor) -> dict:
    return {"ring": ring_to_json(i.ring), "gen": num(i.gen)}


def ideal_from_json(obj: Any, ring: RingDescriptor | None = None, where: str = "ideal") -> IdealDescriptor:
    if ring is None or (isinstance(obj, dict) and "ring" in obj):
        ring = ring_from_json(_field(obj, "ring", where), f"{where}.ring")
    return ideal(ring, parse_int(_field(obj, "gen", where), f"{where}.gen"))


def prime_set_to_json(s: PrimeSet) -> dict:
    if s.cofinite:
        out: dict = {"cofinite_except": [num(q) for q in sorted(s.excluded)]}
    else:
        out = {"finite": [num(g) for g in sorted(s.members - {0})]}
    if s.has_zero:
        out["with_zero"] = True
    return out


def prime_set_from_json(obj: Any, ring: RingDescriptor, where: str = "primes") -> PrimeSet:
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object")
    try:
        if "cofinite_except" in obj:
            exc = [parse_int(x, f"{where}.cofinite_except") for x in obj["cofinite_except"]]
            s = PrimeSet.all_maximals(ring, exc)
        elif "finite" in obj:
            s = PrimeSet.finite(ring, [ideal(ring, parse_int(x, f"{where}.finite")).gen for x in obj["finite"]])
        else:
            raise ParseError(f"{where}: expected 'finite' or 'cofinite_except'")
        if obj.get("with_zero"):
            s = s.with_zero()
        return s
    except RingError as exc:
        raise ParseError(f"{where}: {exc}") from exc


# -- modules ----------------------------------------------------------------


def module_to_json(m) -> dict:
    if isinstance(m, FinPresModule):
        rels = m.relations.generators()
        return {
            "ring": ring_to_json(m.ring),
            "kind": "finpres",
            "gens": num(m.n_gens),
            "relations": [[num(x) for x in g] for g in rels],
        }
    return {
        "ring": ring_to_json(m.ring),
        "kind": "symbolic",
        "free_rank": m.free_rank if m.free_rank == COUNTABLE else num(m.free_rank),
        "cyclics": [{"p": num(c.p), "k": num(c.k), "mult": num(c.mult)} for c in m.cyclics],
        "families": [{"primes": prime_set_to_json(f.primes)} for f in m.families],
        "pruefer": [{"p": num(q.p), "mult": num(q.mult)} for q in m.pruefer],
    }


def module_from_json(obj: Any, where: str = "module"):
    ring = ring_from_json(_field(obj, "ring", where), f"{where}.ring")
    kind = _field(obj, "kind", where)
    if kind == "finpres":
        n = parse_int(_field(obj, "gens", where), f"{where}.gens")
        if n < 0:
            raise ParseError(f"{where}.gens: must be nonnegative")
        rels = obj.get("relations", [])
        if not isinstance(rels, list):
            raise ParseError(f"{where}.relations: expected a list of vectors")
        vecs = [_vector(v, n, f"{where}.relations[{i}]") for i, v in enumerate(rels)]
        if ring.kind not in (Z, ZMODN):
            from .errors import UnsupportedError

            raise UnsupportedError(f"{where}.ring: finitely presented modules over {ring} are not supported")
        return FinPresModule.from_relations(ring, n, vecs)
    if kind == "symbolic":
        fr = obj.get("free_rank", 0)
        free = COUNTABLE if fr == COUNTABLE else parse_int(fr, f"{where}.free_rank")
        try:
            cyc = tuple(
                Cyclic(
                    parse_int(_field(c, "p", f"{where}.cyclics[{i}]"), f"{where}.cyclics[{i}].p"),
                    parse_int(c.get("k", 1), f"{where}.cyclics[{i}].k"),
                    parse_int(c.get("mult", 1), f"{where}.cyclics[{i}].mult"),
                )
                for i, c in enumerate(obj.get("cyclics", []))
            )
            fam = tuple(
                Family(prime_set_from_json(_field(f, "primes", f"{where}.families[{i}]"), ring, f"{where}.families[{i}].primes"))
                for i, f in enumerate(obj.get("families", []))
            )
            pr = tuple(
                Pruefer(
                    parse_int(_field(q, "p", f"{where}.pruefer[{i}]"), f"{where}.pruefer[{i}].p"),
                    parse_int(q.get("mult", 1), f"{where}.pruefer[{i}].mult"),
                )
                for i, q in enumerate(obj.get("pruefer", []))
            )
            return SymbolicModule(ring, free, cyc, fam, pr)
        except (ValueError, RingError) as exc:
            if isinstance(exc, ParseError):
                raise
            raise ParseError(f"{where}: {exc}") from exc
    raise ParseError(f"{where}.kind: expected 'finpres' or 'symbolic', got {kind!r}")


def _vector(v: Any, n: int, where: str) -> list[int]:
    if not isinstance(v, list) or len(v) != n:
        raise ParseError(f"{where}: expected a vector of length {n}")
    return [parse_int(x, f"{where}[{j}]") for j, x in enumerate(v)]


def submodule_to_json(s: Submodule) -> dict:
    return {"gens": [[num(x) for x in g] for g in s.generators()]}


def submodule_from_json(obj: Any, parent: FinPresModule, where: str = "submodule") -> Submodule:
    gens = _field(obj, "gens", where)
    if not isinstance(gens, list):
        raise ParseError(f"{where}.gens: expected a list of vectors")
    return parent.submodule([_vector(g, parent.n_gens, f"{where}.gens[{i}]") for i, g in enumerate(gens)])


# -- certificates -----------------------------------------------------------


def _prime_to_json(p) -> dict:
    if isinstance(p, IdealDescriptor):
        return {"ideal": num(p.gen)}
    return {"class": prime_set_to_json(p)}


def _prime_from_json(obj: dict, ring: RingDescriptor):
    if "ideal" in obj:
        return ideal(ring, parse_int(obj["ideal"], "prime.ideal"))
    return prime_set_from_json(obj["class"], ring, "prime.class")


def certificate_to_json(c: PropertyCertificate, ring: RingDescriptor) -> dict:
    return {
        "property": c.property,
        "ring": ring_to_json(ring),
        "verdict": c.verdict,
        "per_prime": [
            {
                "prime": _prime_to_json(pc.prime),
                "holds": pc.holds,
                "witness": pc.witness,
                "witness_gens": None if pc.witness_gens is None else [[num(x) for x in g] for g in pc.witness_gens],
                "representative": None if pc.representative is None else num(pc.representative),
            }
            for pc in c.per_prime
        ],
        "note": c.note,
    }


def certificate_from_json(obj: dict) -> PropertyCertificate:
    ring = ring_from_json(obj["ring"])
    checks = []
    for e in obj["per_prime"]:
        wg = e.get("witness_gens")
        rep = e.get("representative")
        checks.append(
            PrimeCheck(
                _prime_from_json(e["prime"], ring),
                bool(e["holds"]),
                e["witness"],
                None if wg is None else tuple(tuple(parse_int(x, "witness_gens") for x in g) for g in wg),
                None if rep is None else parse_int(rep, "representative"),
            )
        )
    return PropertyCertificate(obj["property"], bool(obj["verdict"]), tuple(checks), obj.get("note", ""))


__all__ = [
    "ring_to_json",
    "ring_from_json",
    "ideal_to_json",
    "ideal_from_json",
    "prime_set_to_json",
    "prime_set_from_json",
    "module_to_json",
    "module_from_json",
    "submodule_to_json",
    "submodule_from_json",
    "certificate_to_json",
    "certificate_from_json",
    "parse_int",
]
