"""Executable versions of the structural results, run over seeded instances.

Each suite draws instances from an ``InstanceGenerator``, evaluates every
condition of a result through separate code paths, and records a failure
whenever they disagree with each other or with the expected verdict.
Failing module instances are shrunk (drop summands, relations and
generators, move entries toward zero) while they keep failing, and the
shrunk JSON payload is stored in the report so it can be re-run alone.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

import numpy as np

from . import fgmod, symmod
from .errors import PreconditionError, UnsupportedError
from .fgmod import FinPresModule
from .oracle import finite_oracle
from .rings import (
    FP,
    Z,
    ZLOCP,
    ZMODN,
    PrimeSet,
    RingDescriptor,
    field_,
    ideal,
    ideal_product,
    ideal_sum,
    integers,
    is_hilbert,
    is_maximal_ideal,
    is_prime_ideal,
    prime_divisors,
    primes_containing,
    radical_ideal,
    ring_facts,
    spectrum,
    valuation,
    zloc,
    zmod,
)
from .serialize import module_from_json, module_to_json
from .spectop import ClosedSetR, psi_image, psi_surjective, v_ideal, v_submodule
from .symmod import COUNTABLE, Cyclic, Family, Pruefer, SymbolicModule

SMALL_PRIMES = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97]

Check = Callable[[object], Optional[str]]


@dataclass(frozen=True)
class Bounds:
    max_gens: int = 4
    max_entry: int = 30
    max_order: int = 20000
    prime_bound: int = 97
    max_cyclics: int = 3
    max_exponent: int = 3
    max_family_primes: int = 3
    max_modulus: int = 60


@dataclass
class InstanceGenerator:
    seed: int = 0
    bounds: Bounds = field(default_factory=Bounds)

    def rng(self, stream: str) -> random.Random:
        """A fresh stream; the same seed, bounds and name give the same draws."""
        return random.Random(f"{self.seed}:{stream}:{self.bounds}")

    # -- rings ------------------------------------------------------------

    def zmod_ring(self, rng: random.Random) -> RingDescriptor:
        return zmod(rng.randint(2, self.bounds.max_modulus))

    def hilbert_ring(self, rng: random.Random) -> RingDescriptor:
        x = rng.random()
        if x < 0.45:
            return integers()
        if x < 0.85:
            return self.zmod_ring(rng)
        return field_(rng.choice(SMALL_PRIMES[:8]))

    # -- finitely presented modules ---------------------------------------

    def presentation(self, rng: random.Random, ring: RingDescriptor | None = None, finite: bool | None = True) -> FinPresModule:
        b = self.bounds
        while True:
            r = ring or (integers() if rng.random() < 0.5 else self.zmod_ring(rng))
            n = rng.randint(1, b.max_gens)
            style = rng.random()
            if style < 0.35:
                # diagonal with small orders: rich submodule lattices
                orders = [rng.choice([2, 3, 4, 5, 6, 8, 9, 12, 0]) for _ in range(n)]
                rows = [[orders[i] * int(i == j) for j in range(n)] for i in range(n) if orders[i]]
                extra = 0
            else:
                mag = rng.choice([1, 2, 3, 5, 10, b.max_entry])
                zero_p = rng.choice([0.0, 0.3, 0.6])
                extra = rng.randint(0, 1)
                rows = [
                    [0 if rng.random() < zero_p else rng.randint(-mag, mag) for _ in range(n)]
                    for _ in range(n + extra - (rng.random() < 0.2))
                ]
            m = FinPresModule.from_relations(r, n, rows)
            if finite is True and (not m.is_finite or m.order > b.max_order):
                continue
            if finite is False and m.is_finite:
                continue
            if m.is_finite and m.order > b.max_order:
                continue
            return m

    def finite_corpus(self, count: int, stream: str = "corpus") -> list[FinPresModule]:
        rng = self.rng(stream)
        return [self.presentation(rng) for _ in range(count)]

    # -- symbolic modules -------------------------------------------------

    def symbolic(self, rng: random.Random, ring: RingDescriptor | None = None, pruefer: bool = True) -> SymbolicModule:
        b = self.bounds
        r = ring or rng.choice([integers(), self.zmod_ring(rng), zloc(rng.choice(SMALL_PRIMES[:6])), field_(rng.choice(SMALL_PRIMES[:6]))])
        if r.kind == FP:
            return SymbolicModule(r, rng.choice([0, 1, 2, 3, COUNTABLE]))
        x = rng.random()
        free = 0 if x < 0.6 else (rng.randint(1, 2) if x < 0.9 else COUNTABLE)
        primes = self._ring_primes(r)
        cyclics = []
        for _ in range(rng.randint(0, b.max_cyclics)):
            p = rng.choice(primes)
            kmax = b.max_exponent if r.kind != ZMODN else valuation(r.n, p)
            cyclics.append(Cyclic(p, rng.randint(1, max(1, min(kmax, b.max_exponent))), rng.randint(1, 2)))
        families = []
        if rng.random() < 0.4:
            if r.kind == Z and rng.random() < 0.6:
                exc = rng.sample(SMALL_PRIMES[:6], rng.randint(0, 2))
                families.append(Family(PrimeSet.all_maximals(r, exc)))
            else:
                k = min(len(primes), rng.randint(1, b.max_family_primes))
                families.append(Family(PrimeSet.finite(r, rng.sample(primes, k))))
        pr = []
        if pruefer and r.kind in (Z, ZLOCP) and rng.random() < 0.3:
            pr.append(Pruefer(rng.choice(primes), 1))
        return SymbolicModule(r, free, tuple(cyclics), tuple(families), tuple(pr))

    def semisimple(self, rng: random.Random) -> SymbolicModule:
        """A nonzero semisimple symbolic module."""
        while True:
            x = rng.random()
            if x < 0.55:
                r = integers()
                cyc = tuple(Cyclic(p, 1, rng.randint(1, 2)) for p in rng.sample(SMALL_PRIMES, rng.randint(0, 3)))
                fams = ()
                y = rng.random()
                if y < 0.5:
                    exc = rng.sample(SMALL_PRIMES[:8], rng.choice([0, 0, 1, 2, 3]))
                    fams = (Family(PrimeSet.all_maximals(r, exc)),)
                elif y < 0.7:
                    fams = (Family(PrimeSet.finite(r, rng.sample(SMALL_PRIMES, rng.randint(1, 3)))),)
                m = SymbolicModule(r, 0, cyc, fams)
            elif x < 0.8:
                r = self.zmod_ring(rng)
                primes = list(prime_divisors(r.n))
                cyc = tuple(Cyclic(p, 1) for p in rng.sample(primes, rng.randint(0, len(primes))))
                sqfree = all(valuation(r.n, p) == 1 for p in primes)
                free = rng.randint(0, 2) if sqfree else 0
                m = SymbolicModule(r, free, cyc)
            elif x < 0.9:
                r = zloc(rng.choice(SMALL_PRIMES[:5]))
                m = SymbolicModule(r, 0, (Cyclic(r.p, 1, rng.randint(1, 3)),))
            else:
                r = field_(rng.choice(SMALL_PRIMES[:5]))
                m = SymbolicModule(r, rng.choice([1, 2, COUNTABLE]))
            if not m.is_zero:
                return m

    def _ring_primes(self, r: RingDescriptor) -> list[int]:
        if r.kind == Z:
            return [p for p in SMALL_PRIMES if p <= self.bounds.prime_bound]
        if r.kind == ZMODN:
            return list(prime_divisors(r.n))
        return [r.p]


# ---------------------------------------------------------------------------
# reports and shrinking


@dataclass
class SuiteReport:
    suite: str
    trials: int
    failures: list = field(default_factory=list)
    seed: int = 0
    elapsed: float = 0.0
    covers: tuple = ()
    notes: list = field(default_factory=list)
    parts: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "suite": self.suite,
            "trials": self.trials,
            "failures": self.failures,
            "seed": self.seed,
            "covers": list(self.covers),
            "notes": self.notes,
            "parts": self.parts,
            "passed": self.passed,
        }
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out


def _safe(check: Check, m) -> Optional[str]:
    try:
        return check(m)
    except (PreconditionError, UnsupportedError):
        return None


def _fgmod_candidates(obj: dict) -> Iterable[dict]:
    n = int(obj["gens"])
    rels = [[int(x) for x in r] for r in obj["relations"]]
    for i in range(len(rels)):
        yield {**obj, "relations": rels[:i] + rels[i + 1:]}
    if n > 1:
        for j in range(n):
            yield {**obj, "gens": n - 1, "relations": [r[:j] + r[j + 1:] for r in rels]}
    for i, r in enumerate(rels):
        for j, x in enumerate(r):
            if x:
                for y in (0, x // 2 if abs(x) > 1 else 0, x - (1 if x > 0 else -1)):
                    if y != x:
                        nr = [row[:] for row in rels]
                        nr[i][j] = y
                        yield {**obj, "relations": nr}


def _symbolic_candidates(obj: dict) -> Iterable[dict]:
    for key in ("cyclics", "families", "pruefer"):
        items = obj.get(key, [])
        for i in range(len(items)):
            yield {**obj, key: items[:i] + items[i + 1:]}
    if obj.get("free_rank") not in (0, "0"):
        yield {**obj, "free_rank": 0}
    for i, c in enumerate(obj.get("cyclics", [])):
        if int(c["k"]) > 1:
            cs = list(obj["cyclics"])
            cs[i] = {**c, "k": str(int(c["k"]) - 1)}
            yield {**obj, "cyclics": cs}
        if int(c.get("mult", 1)) > 1:
            cs = list(obj["cyclics"])
            cs[i] = {**c, "mult": "1"}
            yield {**obj, "cyclics": cs}


def shrink(m, check: Check, max_steps: int = 200):
    """Greedily simplify ``m`` while ``check`` keeps reporting a failure."""
    obj = module_to_json(m)
    reason = _safe(check, m)
    steps = 0
    progress = True
    while progress and steps < max_steps:
        progress = False
        cands = _fgmod_candidates(obj) if obj["kind"] == "finpres" else _symbolic_candidates(obj)
        for cand in cands:
            steps += 1
            try:
                cm = module_from_json(cand)
            except Exception:
                continue
            r = _safe(check, cm)
            if r is not None:
                obj, reason, progress = module_to_json(cm), r, True
                break
    return module_from_json(obj), reason


def run_checks(suite: str, instances: Iterable, check: Check, seed: int = 0, covers=(), do_shrink: bool = True) -> SuiteReport:
    t0 = time.perf_counter()
    rep = SuiteReport(suite, 0, seed=seed, covers=tuple(covers))
    for i, m in enumerate(instances):
        rep.trials += 1
        reason = check(m)
        if reason is None:
            continue
        entry = {"trial": i, "reason": reason}
        if isinstance(m, (FinPresModule, SymbolicModule)):
            entry["instance"] = module_to_json(m)
            small, why = shrink(m, check) if do_shrink else (m, reason)
            entry["shrunk"] = module_to_json(small)
            entry["shrunk_reason"] = why
        rep.failures.append(entry)
    rep.elapsed = time.perf_counter() - t0
    return rep


def merge(suite: str, reports: list[SuiteReport], seed: int, covers=()) -> SuiteReport:
    out = SuiteReport(suite, 0, seed=seed, covers=tuple(covers))
    for r in reports:
        out.trials += r.trials
        out.failures += [{**f, "part": r.suite} for f in r.failures]
        out.elapsed += r.elapsed
        out.notes += r.notes
        for k, v in (r.parts or {r.suite: r.trials}).items():
            out.parts[k] = out.parts.get(k, 0) + v
    return out


def _single(suite: str, m, check: Check, covers=()) -> SuiteReport:
    return run_checks(suite, [m], check, covers=covers)


def _agree(values: dict) -> Optional[str]:
    if len(set(values.values())) > 1:
        return "conditions disagree: " + ", ".join(f"{k}={v}" for k, v in values.items())
    return None


# ---------------------------------------------------------------------------
# closed forms against the brute-force oracle

def check_oracle(m: FinPresModule) -> Optional[str]:
    o = finite_oracle(m)
    for s in range(o.count):
        n = o.lattice_of(s)
        got, want = fgmod.is_prime_submodule(n), o.prime_at(s)
        if got != want:
            return f"is_prime_submodule({n}) = {got}, enumeration says {want}"
        if fgmod.colon(n) != o.colon_at(s):
            return f"colon({n}) differs from enumeration"
        if not np.array_equal(o.mask_of(fgmod.prime_radical(n)), o.radical_mask_at(s)):
            return f"prime_radical({n}) differs from enumeration"
    return None


def verify_oracle(gen: InstanceGenerator, trials: int = 500) -> SuiteReport:
    corpus = gen.finite_corpus(trials)
    rep = run_checks("oracle", corpus, check_oracle, gen.seed, ("fgmod",))
    for m in corpus:
        rep.parts[m.ring.kind] = rep.parts.get(m.ring.kind, 0) + 1
    return rep


# ---------------------------------------------------------------------------
# radical at primes and at ideals


def prop21_conditions(m: FinPresModule) -> dict:
    """The four formulations over all ideals / primes over ``Ann(M)``.

    The first two use the closed-form radical, the last two intersect the
    colons of enumerated prime submodules containing ``IM``.
    """
    o = finite_oracle(m)
    r = m.ring
    ideals = fgmod.ideals_over_ann(m)
    primes = [i for i in ideals if is_prime_ideal(i)]

    def via_radical(i):
        return fgmod.colon(fgmod.prime_radical(m.ideal_times(i)))

    def via_spectrum(i):
        out = ideal(r, 1)
        first = True
        for c in o.primes_over(m.ideal_times(i)):
            out = c if first else _meet(out, c)
            first = False
        return out

    return {
        "radical_at_ideals": all(via_radical(i) == radical_ideal(r, i) for i in ideals),
        "radical_at_primes": all(via_radical(P) == P for P in primes),
        "spectrum_at_ideals": all(via_spectrum(i) == radical_ideal(r, i) for i in ideals),
        "spectrum_at_primes": all(via_spectrum(P) == P for P in primes),
        "certificate": fgmod.check_p_radical(m).verdict,
    }


def _meet(a, b):
    from .rings import ideal_intersection

    return ideal_intersection(a, b)


def check_prop21(m: FinPresModule) -> Optional[str]:
    vals = prop21_conditions(m)
    bad = _agree(vals)
    if bad:
        return bad
    if not vals["certificate"]:
        return "a finitely generated module failed to be prime-radical"
    return None


def verify_prop21(m: FinPresModule) -> SuiteReport:
    if not m.is_finite:
        raise PreconditionError("the ideal quantification needs a finite module")
    return _single("prop_2_1", m, check_prop21, ("prop_2_1", "def_2_2"))


def prop29_conditions(m) -> dict:
    """The five formulations of maximal-radicality, each through its own route."""
    if isinstance(m, SymbolicModule):
        maxes = symmod.prime_targets(m, maximal_only=True)
        allp = symmod.prime_targets(m)
        return {
            "radical_colon": all(symmod.radical_colon(m, t.gen) == ideal(m.ring, t.gen) for t in maxes),
            "scalar_image": symmod.check_m_radical(m).verdict,
            "all_primes": all(not symmod.scales_onto(m, t.gen) for t in allp),
            "maximal_submodule": all(symmod.maximal_submodule_witness(m, t.gen) is not None for t in maxes),
            "prime_submodule": all(t.gen in symmod.realized_colons(m) for t in maxes),
        }
    gens = _fg_maximal_targets(m)
    out = {
        "radical_colon": all(fgmod.colon(fgmod.prime_radical(m.scaled(g))) == ideal(m.ring, g) for g in gens),
        "scalar_image": fgmod.check_m_radical(m).verdict,
        "all_primes": all(not m.scaled(g).is_whole for g in _fg_all_targets(m)),
    }
    ok4 = True
    for g in gens:
        w = fgmod.maximal_submodule_over(m, g)
        if w is None or w.quotient_free_rank != 0 or w.quotient_factors != (g,) or fgmod.colon(w) != ideal(m.ring, g):
            ok4 = False
    out["maximal_submodule"] = ok4
    if m.is_finite:
        realized = finite_oracle(m).realized_colons()
        out["prime_submodule"] = all(ideal(m.ring, g).gen in realized for g in gens)
    else:
        out["prime_submodule"] = all(fgmod.is_prime_submodule(m.scaled(g)) == (True, ideal(m.ring, g)) for g in gens)
    return out


def _fg_all_targets(m: FinPresModule) -> list[int]:
    explicit, generic = fgmod.primes_over_ann(m)
    gens = list(explicit)
    if generic is not None:
        gens.append(fgmod.generic_representative(generic))
    return gens


def _fg_maximal_targets(m: FinPresModule) -> list[int]:
    return [g for g in _fg_all_targets(m) if is_maximal_ideal(ideal(m.ring, g))]


def check_prop29(m) -> Optional[str]:
    # the equivalence is stated for nonzero modules
    if m.is_zero:
        return None
    return _agree(prop29_conditions(m))


def prop29_witnesses(m) -> list[str]:
    """Maximal and prime submodules realizing each maximal ideal over ``Ann(M)``."""
    out = []
    if isinstance(m, SymbolicModule):
        for t in symmod.prime_targets(m, maximal_only=True):
            w = symmod.maximal_submodule_witness(m, t.gen)
            if w is not None:
                out.append(f"({t.gen}): {w}")
        return out
    for g in _fg_maximal_targets(m):
        w = fgmod.maximal_submodule_over(m, g)
        if w is not None:
            out.append(f"({g}): {w}")
    return out


def verify_prop29(m) -> SuiteReport:
    rep = _single("prop_2_9", m, check_prop29, ("prop_2_9", "def_2_8"))
    if rep.passed and not m.is_zero and all(prop29_conditions(m).values()):
        rep.notes += prop29_witnesses(m)
    return rep


def verify_prop29_suite(gen: InstanceGenerator, trials: int = 500) -> SuiteReport:
    rng = gen.rng("prop29")
    cov = ("prop_2_9", "def_2_8")
    parts = [
        run_checks("finite corpus", gen.finite_corpus(trials), check_prop29, gen.seed),
        run_checks("presented", [gen.presentation(rng, finite=None) for _ in range(trials // 5)], check_prop29, gen.seed),
        run_checks("symbolic", [gen.symbolic(rng) for _ in range(trials)], check_prop29, gen.seed),
        run_checks(
            "fixed",
            [symmod.construct_prop27(integers()), symmod.pruefer_module(integers(), 5), FinPresModule.cyclic(integers(), 12)],
            check_prop29,
            gen.seed,
        ),
    ]
    return merge("prop_2_9", parts, gen.seed, cov)


def verify_prop21_suite(gen: InstanceGenerator, trials: int = 500) -> SuiteReport:
    return merge(
        "prop_2_1",
        [run_checks("finite corpus", gen.finite_corpus(trials), check_prop21, gen.seed)],
        gen.seed,
        ("prop_2_1", "def_2_2"),
    )


# ---------------------------------------------------------------------------
# finitely presented modules are well behaved


def check_fg_all_three(m: FinPresModule) -> Optional[str]:
    bad = [c.property for c in (fgmod.check_primeful(m), fgmod.check_p_radical(m), fgmod.check_m_radical(m)) if not c.verdict]
    return f"finitely presented module fails {bad}" if bad else None


def check_zmod_pradical(m) -> Optional[str]:
    cert = fgmod.check_p_radical(m) if isinstance(m, FinPresModule) else symmod.check_p_radical(m)
    return None if cert.verdict else f"module over {m.ring} is not prime-radical"


def verify_cor24(gen: InstanceGenerator, trials: int = 500) -> SuiteReport:
    rng = gen.rng("cor24")
    over_z = [gen.presentation(rng, integers(), finite=None) for _ in range(trials)]
    r1 = run_checks("Z presented", over_z, check_fg_all_three, gen.seed)
    fp = [gen.presentation(rng, gen.zmod_ring(rng), finite=None) for _ in range(trials)]
    r2 = run_checks("Z/n presented", fp, check_zmod_pradical, gen.seed)
    sy = [gen.symbolic(rng, gen.zmod_ring(rng)) for _ in range(trials)]
    r3 = run_checks("Z/n symbolic", sy, check_zmod_pradical, gen.seed)
    return merge("cor_2_4", [r1, r2, r3], gen.seed, ("prop_2_3", "cor_2_4", "thm_2_13"))


# ---------------------------------------------------------------------------
# prime-radical versus maximal-radical


def _certs(m):
    mod = fgmod if isinstance(m, FinPresModule) else symmod
    return mod.check_primeful(m), mod.check_p_radical(m), mod.check_m_radical(m)


def check_thm211(m) -> Optional[str]:
    _, p, mm = _certs(m)
    if p.verdict != mm.verdict:
        return f"prime-radical {p.verdict} but maximal-radical {mm.verdict} over Hilbert ring {m.ring}"
    return None


def verify_thm211(gen: InstanceGenerator, trials: int = 1000) -> SuiteReport:
    rng = gen.rng("thm211")
    insts = []
    for i in range(trials):
        r = gen.hilbert_ring(rng)
        if r.kind != FP and i % 3 == 0:
            insts.append(gen.presentation(rng, r, finite=None))
        else:
            insts.append(gen.symbolic(rng, r))
    rep = run_checks("Hilbert rings", insts, check_thm211, gen.seed)
    extra = run_checks("non-Hilbert construction", [zloc(p) for p in SMALL_PRIMES[:5]], _check_thm211_construction, gen.seed)
    rep = merge("thm_2_11", [rep, extra], gen.seed, ("thm_2_11", "lemma_2_10"))
    rep.notes.append("non-Hilbert rings: discrepancy certified for F_p + Z(p^inf) over Z_(p), p <= 11")
    return rep


def _check_thm211_construction(ring: RingDescriptor) -> Optional[str]:
    if is_hilbert(ring):
        return f"{ring} should not be Hilbert"
    m = symmod.construct_thm211(ring)
    _, p, mm = _certs(m)
    if not mm.verdict or p.verdict:
        return "construction did not separate the two properties"
    bad = p.failing()
    if [c.prime for c in bad] != [ideal(ring, 0)]:
        return f"expected the single failing prime (0), got {[c.label() for c in bad]}"
    if symmod.radical_colon(m, 0) != ideal(ring, ring.p):
        return "radical colon at (0) should be (p)"
    for h in (integers(), zmod(12), field_(5)):
        try:
            symmod.construct_thm211(h)
        except PreconditionError:
            continue
        return f"construction accepted Hilbert ring {h}"
    return None


# ---------------------------------------------------------------------------
# dimension zero and the ring-level chain


def check_dim0_instance(m) -> Optional[str]:
    f, p, mm = _certs(m)
    if not (f.verdict and p.verdict and mm.verdict):
        return f"over {m.ring}: primeful={f.verdict} pradical={p.verdict} mradical={mm.verdict}"
    return None


def verify_thm212_213_216(gen: InstanceGenerator, trials: int = 500) -> SuiteReport:
    rng = gen.rng("thm212")
    zero_dim = []
    for i in range(trials):
        r = gen.zmod_ring(rng) if rng.random() < 0.8 else field_(rng.choice(SMALL_PRIMES[:6]))
        if r.kind == ZMODN and i % 2 == 0:
            zero_dim.append(gen.presentation(rng, r, finite=None))
        else:
            zero_dim.append(gen.symbolic(rng, r))
    rep = run_checks("thm_2_12", zero_dim, check_dim0_instance, gen.seed)
    for r in {m.ring for m in zero_dim}:
        if ring_facts(r).krull_dim != 0:
            rep.failures.append({"reason": f"{r} should have dimension 0"})
    # positive dimension: counterexamples must show up
    found = {"Z_not_primeful": None, "Z_not_mradical": None, "Zloc_not_mradical": None, "Z_mradical_not_primeful": None}
    z, z5 = integers(), zloc(5)
    fixed = [symmod.construct_prop27(z), symmod.pruefer_module(z, 5), symmod.pruefer_module(z5, 5)]
    drawn = [gen.symbolic(rng, integers() if i % 2 == 0 else zloc(rng.choice(SMALL_PRIMES[:5]))) for i in range(trials)]
    for m in fixed + drawn:
        r = m.ring
        f, p, mm = _certs(m)
        if r.kind == Z:
            if not f.verdict:
                found["Z_not_primeful"] = found["Z_not_primeful"] or str(m)
            if not mm.verdict:
                found["Z_not_mradical"] = found["Z_not_mradical"] or str(m)
            if mm.verdict and not f.verdict:
                found["Z_mradical_not_primeful"] = found["Z_mradical_not_primeful"] or str(m)
        elif not mm.verdict:
            found["Zloc_not_mradical"] = found["Zloc_not_mradical"] or str(m)
        rep.trials += 1
    for k, v in found.items():
        if v is None:
            rep.failures.append({"reason": f"no instance found for {k}"})
        else:
            rep.notes.append(f"{k}: {v}")
    rep.covers = ("thm_2_12", "thm_2_13", "thm_2_16", "cor_2_17")
    return rep


# ---------------------------------------------------------------------------
# chain of properties and multiplication modules


def chain_values(m) -> dict:
    mod = fgmod if isinstance(m, FinPresModule) else symmod
    return {
        "primeful": mod.check_primeful(m).verdict,
        "pradical": mod.check_p_radical(m).verdict,
        "colon": mod.colon_equality(m).verdict,
        "mradical": mod.check_m_radical(m).verdict,
    }


def check_chain(m) -> Optional[str]:
    v = chain_values(m)
    order = ["primeful", "pradical", "colon", "mradical"]
    for a, b in zip(order, order[1:]):
        if v[a] and not v[b]:
            return f"{a} holds but {b} does not"
    if isinstance(m, FinPresModule):
        if not all(v.values()):
            return f"finitely presented module breaks the chain: {v}"
        if m.is_finite and m.order <= 4096:
            mult = fgmod.is_multiplication(m)
            if mult != m.is_cyclic:
                return f"is_multiplication={mult} but cyclic={m.is_cyclic}"
    return None


def verify_chain(m) -> SuiteReport:
    return _single("prop_2_18", m, check_chain, ("prop_2_18", "prop_2_3"))


def verify_chain_suite(gen: InstanceGenerator, trials: int = 500) -> SuiteReport:
    rng = gen.rng("chain")
    insts = [gen.presentation(rng, finite=None if i % 3 else True) for i in range(trials // 2)]
    insts += [gen.symbolic(rng) for _ in range(trials - trials // 2)]
    return run_checks("prop_2_18", insts, check_chain, gen.seed, ("prop_2_18", "prop_2_3"))


# ---------------------------------------------------------------------------
# Nakayama-type condition


def jacobson_ideals(r: RingDescriptor) -> list:
    """Ideals contained in the Jacobson radical (a finite list; only (0) for Z)."""
    if r.kind == ZMODN:
        from sympy import divisors

        j = ring_facts(r).jacobson_radical.gen
        return [ideal(r, d) for d in divisors(r.n) if d % j == 0]
    if r.kind == ZLOCP:
        return [ideal(r, 0)] + [ideal(r, r.p ** k) for k in (1, 2, 3)]
    return [ideal(r, 0)]


def check_nakayama(m) -> Optional[str]:
    if isinstance(m, FinPresModule):
        mrad = fgmod.check_m_radical(m).verdict
        onto = lambda i: m.ideal_times(i).is_whole  # noqa: E731
        zero = m.is_zero
    else:
        mrad = symmod.check_m_radical(m).verdict
        onto = lambda i: symmod.scales_onto(m, i)  # noqa: E731
        zero = m.is_zero
    for i in jacobson_ideals(m.ring):
        if onto(i) and not zero:
            if mrad:
                return f"{i}M = M with M != 0 for a maximal-radical module"
    return None


def verify_nakayama(gen: InstanceGenerator, trials: int = 200) -> SuiteReport:
    rng = gen.rng("nakayama")
    insts = []
    for i in range(trials):
        if i % 3 == 0:
            insts.append(gen.presentation(rng, gen.zmod_ring(rng), finite=None))
        else:
            insts.append(gen.symbolic(rng, rng.choice([gen.zmod_ring(rng), zloc(rng.choice(SMALL_PRIMES[:4])), integers()])))
    rep = run_checks("nakayama", insts, check_nakayama, gen.seed)
    fixed = run_checks("nakayama", [None], lambda _: _nakayama_fixed(), gen.seed)
    return merge("nakayama", [rep, fixed], gen.seed, ("prop_2_19",))


def _nakayama_fixed() -> Optional[str]:
    z8 = zmod(8)
    for m in [FinPresModule.cyclic(z8, 0), FinPresModule.cyclic(z8, 4), FinPresModule.direct_sum(z8, [2, 4, 0])]:
        if m.ideal_times(ideal(z8, 2)).is_whole:
            return f"2M = M for nonzero {m}"
    if not FinPresModule.from_relations(z8, 1, [[1]]).ideal_times(ideal(z8, 2)).is_whole:
        return "2M = M should hold for the zero module"
    zl = zloc(5)
    pr = symmod.pruefer_module(zl, 5)
    if not symmod.scales_onto(pr, 5) or symmod.check_m_radical(pr).verdict:
        return "Z(5^inf) over Z_(5): expected 5M = M and not maximal-radical"
    return None


# ---------------------------------------------------------------------------
# semisimple modules


def semisimple_values(m: SymbolicModule) -> dict:
    full = symmod.is_full_semisimple(m)
    dim0 = symmod.annihilator_quotient_dim(m) == 0
    hil = symmod.annihilator_quotient_is_hilbert(m)
    f, p, mm = _certs(m)
    return {
        "full": full,
        "mradical": mm.verdict,
        "pradical": p.verdict,
        "primeful": f.verdict,
        "dim0": dim0,
        "hilbert_quotient": hil,
        "homogeneous": symmod.is_homogeneous_semisimple(m),
        "prime_module": symmod.is_prime_module(m),
        "finite_ann": not symmod.ann(m).is_zero or is_maximal_ideal(symmod.ann(m)),
    }


def check_semisimple(m: SymbolicModule) -> Optional[str]:
    v = semisimple_values(m)
    if v["finite_ann"] and not v["full"]:
        return "annihilator is a finite intersection of maximals but module is not full"
    if v["homogeneous"] != v["prime_module"]:
        return f"homogeneous={v['homogeneous']} but prime module={v['prime_module']}"
    if v["mradical"] != v["full"]:
        return f"maximal-radical={v['mradical']} but full={v['full']}"
    if v["pradical"] != (v["mradical"] and v["hilbert_quotient"]):
        return "prime-radical differs from maximal-radical with Hilbert quotient"
    if v["pradical"] != (v["full"] and v["hilbert_quotient"]):
        return "prime-radical differs from full with Hilbert quotient"
    if not (v["pradical"] == v["mradical"] == v["full"]):
        return f"three semisimple conditions differ: {v}"
    rows = [v["primeful"], v["pradical"] and v["dim0"], v["mradical"] and v["dim0"], v["full"] and v["dim0"]]
    if len(set(rows)) > 1:
        return f"primeful characterization differs: {rows}"
    return None


def verify_semisimple(gen: InstanceGenerator, trials: int = 500) -> SuiteReport:
    rng = gen.rng("semisimple")
    insts = [gen.semisimple(rng) for _ in range(trials)]
    z = integers()
    insts += [
        symmod.construct_prop27(z),
        symmod.simple_family_module(z, [2]),
        SymbolicModule(z, 0, (Cyclic(2), Cyclic(3))),
        SymbolicModule(z, 0, (Cyclic(5, 1, 3),)),
    ]
    rep = run_checks(
        "semisimple",
        insts,
        check_semisimple,
        gen.seed,
        ("def_3_1", "example_3_2", "prop_3_3", "lemma_3_4", "prop_3_5", "prop_3_6", "cor_3_7", "cor_3_8"),
    )
    for m in insts:
        k = semisimple_kind(m)
        rep.parts[k] = rep.parts.get(k, 0) + 1
    return rep


def semisimple_kind(m: SymbolicModule) -> str:
    """finite: no cofinite family; cofinite: a cofinite family without
    exceptions; mixed: a cofinite family with exceptions."""
    cof = [f.primes for f in m.families if f.primes.cofinite]
    if not cof:
        return "finite"
    return "mixed" if any(p.excluded for p in cof) else "cofinite"


# ---------------------------------------------------------------------------
# topology


def check_vn(m: FinPresModule) -> Optional[str]:
    o = finite_oracle(m)
    colons = [o.colon_at(s) for s in o.prime_indices()]

    def members(v) -> tuple:
        return tuple(j for j, c in enumerate(colons) if v.contains_colon(c))

    for s in range(o.count):
        n = o.lattice_of(s)
        rad = fgmod.prime_radical(n)
        b = v_submodule(rad)
        if members(v_submodule(n)) != members(b):
            return f"V({n}) != V(rad {n})"
        if not rad.is_whole and b.radical != fgmod.colon(rad):
            return f"colon of the radical of {n} is not the radical of its colon"
    if psi_surjective(m) != fgmod.check_primeful(m).verdict:
        return "psi surjectivity disagrees with the primeful certificate"
    realized = {ideal(m.ring, c).gen for c in o.realized_colons()}
    if PrimeSet.finite(m.ring, realized) != psi_image(m):
        return "psi image differs from enumerated prime submodules"
    return None


def random_closed_set(rng: random.Random, r: RingDescriptor) -> ClosedSetR:
    x = rng.random()
    if x < 0.1:
        return ClosedSetR.whole(r)
    if x < 0.2:
        return ClosedSetR.empty(r)
    if x < 0.6:
        g = rng.choice([0, 1, rng.randint(1, 500)])
        return v_ideal(r, ideal(r, g))
    if r.kind == Z:
        return ClosedSetR.of(r, rng.sample(SMALL_PRIMES[:8], rng.randint(0, 3)))
    ms = [g for g in spectrum(r) if is_maximal_ideal(ideal(r, g))]
    return ClosedSetR.of(r, rng.sample(ms, rng.randint(0, len(ms))))


def check_closed_triple(triple) -> Optional[str]:
    a, b, c = triple
    W, E = ClosedSetR.whole(a.ring), ClosedSetR.empty(a.ring)
    laws = {
        "union commutes": a | b == b | a,
        "intersection commutes": a & b == b & a,
        "union associates": (a | b) | c == a | (b | c),
        "intersection associates": (a & b) & c == a & (b & c),
        "absorption": a | (a & b) == a and a & (a | b) == a,
        "idempotent": a | a == a and a & a == a,
        "distributive": a & (b | c) == (a & b) | (a & c),
        "bounds": a | E == a and a & W == a and a | W == W and a & E == E,
        "order": (a <= b) == (a & b == a) and a <= a | b,
    }
    bad = [k for k, ok in laws.items() if not ok]
    return f"closed-set laws fail: {bad}" if bad else None


def check_ideal_pair(pair) -> Optional[str]:
    i, j = pair
    r = i.ring
    if v_ideal(r, i) | v_ideal(r, j) != v_ideal(r, ideal_product(i, j)):
        return f"V({i}) u V({j}) != V({i}{j})"
    if v_ideal(r, i) & v_ideal(r, j) != v_ideal(r, ideal_sum(i, j)):
        return f"V({i}) n V({j}) != V({i}+{j})"
    if v_ideal(r, radical_ideal(r, i)) != v_ideal(r, i):
        return f"V(sqrt {i}) != V({i})"
    if (v_ideal(r, i) <= v_ideal(r, j)) != (radical_ideal(r, j) <= radical_ideal(r, i)):
        return "closed-set inclusion does not reverse radical inclusion"
    return None


def verify_topology(gen: InstanceGenerator, trials: int = 500, triples: int = 10000) -> SuiteReport:
    rng = gen.rng("topology")
    rings = [integers(), zmod(12), zmod(30), zmod(7), zloc(5), field_(3)]
    r1 = run_checks("finite corpus", gen.finite_corpus(trials), check_vn, gen.seed)
    trip = []
    pairs = []
    for _ in range(triples):
        r = rng.choice(rings)
        trip.append(tuple(random_closed_set(rng, r) for _ in range(3)))
        pairs.append((ideal(r, rng.randint(0, 300)), ideal(r, rng.randint(0, 300))))
    r2 = run_checks("closed-set triples", trip, check_closed_triple, gen.seed)
    r3 = run_checks("ideal pairs", pairs, check_ideal_pair, gen.seed)
    return merge("topology", [r1, r2, r3], gen.seed, ("zariski",))


# ---------------------------------------------------------------------------
# radical formula and the existence construction


def check_radical_formula_finite(m: FinPresModule) -> Optional[str]:
    for i in fgmod.ideals_over_ann(m):
        if not fgmod.check_radical_formula(m, i):
            return f"radical formula fails at {i} on a finite module"
    return None


def verify_radical_formula(gen: InstanceGenerator, trials: int = 200) -> SuiteReport:
    rep = run_checks("radical_formula", gen.finite_corpus(trials, "radical_formula"), check_radical_formula_finite, gen.seed)
    fixed = run_checks("radical_formula", [None], lambda _: _radical_formula_fixed(), gen.seed)
    return merge("radical_formula", [rep, fixed], gen.seed, ("radical_formula",))


def _radical_formula_fixed() -> Optional[str]:
    z = integers()
    m12 = FinPresModule.cyclic(z, 12)
    if not fgmod.check_radical_formula(m12, ideal(z, 4)) or fgmod.prime_radical(m12.scaled(4)) != m12.scaled(2):
        return "Z/12 at (4) should give 2M on both sides"
    mz = FinPresModule.cyclic(z, 0)
    if not fgmod.check_radical_formula(mz, ideal(z, 0)):
        return "Z at (0) should satisfy the formula"
    m = FinPresModule.direct_sum(z, [0, 4])
    if fgmod.check_radical_formula(m, ideal(z, 0)):
        return "Z + Z/4 at (0) should violate the formula"
    if fgmod.prime_radical(m.zero()) != m.submodule([[0, 2]]):
        return "radical of 0 in Z + Z/4 should be 0 + 2Z/4"
    if not fgmod.check_p_radical(m).verdict:
        return "Z + Z/4 should still be prime-radical"
    return None


def check_prop27(ring: RingDescriptor) -> Optional[str]:
    if ring.kind == Z:
        m = symmod.construct_prop27(ring)
        f, p, mm = _certs(m)
        if not p.verdict or f.verdict:
            return "construction should be prime-radical and not primeful"
        # the zero ideal is the intersection of the strictly larger primes
        above = primes_containing(ring, ideal(ring, 0)).maximal_part()
        if above.intersection_ideal() != ideal(ring, 0):
            return "(0) should be the intersection of the maximal ideals"
        return None
    try:
        symmod.construct_prop27(ring)
    except PreconditionError:
        return None
    return f"construction accepted {ring}"


def verify_prop27(gen: InstanceGenerator, trials: int = 0) -> SuiteReport:
    rings = [integers(), zmod(12), zmod(7), zloc(5), field_(5)]
    return run_checks("prop_2_7", rings, check_prop27, gen.seed, ("prop_2_7", "example_2_6"))


# ---------------------------------------------------------------------------
# registry

SUITES = {
    "oracle": (verify_oracle, 500),
    "prop_2_1": (verify_prop21_suite, 500),
    "prop_2_9": (verify_prop29_suite, 500),
    "cor_2_4": (verify_cor24, 500),
    "thm_2_11": (verify_thm211, 1000),
    "thm_2_12": (verify_thm212_213_216, 500),
    "prop_2_18": (verify_chain_suite, 500),
    "nakayama": (verify_nakayama, 200),
    "semisimple": (verify_semisimple, 500),
    "topology": (verify_topology, 500),
    "radical_formula": (verify_radical_formula, 200),
    "prop_2_7": (verify_prop27, 0),
}

REQUIRED_COVERAGE = (
    "prop_2_1", "prop_2_3", "cor_2_4", "example_2_6", "prop_2_7", "prop_2_9", "lemma_2_10",
    "thm_2_11", "thm_2_12", "thm_2_13", "thm_2_16", "cor_2_17", "prop_2_18", "prop_2_19",
    "def_3_1", "example_3_2", "prop_3_3", "lemma_3_4", "prop_3_5", "prop_3_6", "cor_3_7", "cor_3_8",
)


def run_suite(name: str, seed: int = 0, trials: int | None = None, bounds: Bounds | None = None) -> SuiteReport:
    if name not in SUITES:
        raise KeyError(name)
    fn, default = SUITES[name]
    gen = InstanceGenerator(seed, bounds or Bounds())
    t0 = time.perf_counter()
    rep = fn(gen, default if trials is None else trials)
    rep.elapsed = time.perf_counter() - t0
    rep.seed = seed
    return rep


def coverage(reports: Iterable[SuiteReport]) -> tuple[set, set]:
    covered = set()
    for r in reports:
        covered |= set(r.covers)
    return covered, set(REQUIRED_COVERAGE) - covered


__all__ = [
    "Bounds",
    "InstanceGenerator",
    "SuiteReport",
    "SUITES",
    "run_suite",
    "run_checks",
    "shrink",
    "coverage",
    "verify_prop21",
    "verify_prop29",
    "verify_thm211",
    "verify_thm212_213_216",
    "verify_chain",
    "verify_nakayama",
    "verify_semisimple",
    "verify_topology",
    "verify_oracle",
    "check_oracle",
    "check_prop21",
    "check_prop29",
    "check_semisimple",
    "check_vn",
]
