"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Tolerances are pinned: every comparison is exact, runtimes use the limits
below, and all suites run at ``SEED``.
"""
import time

from pradical import fgmod, gallery, harness, symmod
from pradical.fgmod import FinPresModule
from pradical.harness import Bounds, InstanceGenerator
from pradical.rings import Z, ZMODN, ideal, integers, zloc

SEED = 1
GALLERY_SECONDS = 1.0
ORACLE_SECONDS = 60.0
MAX_ORDER = 20000


def _summary(rep) -> str:
    parts = ", ".join(f"{k}={v}" for k, v in rep.parts.items())
    return f"{rep.trials} instances ({parts}), {len(rep.failures)} failures, {rep.elapsed:.1f}s"


def test_gallery_reproduction(verdict):
    t0 = time.perf_counter()
    got = gallery.compute()
    elapsed = time.perf_counter() - t0
    diff = gallery.compare(got, gallery.expected())
    e26, m1, zl, pr = got["example_2_6"], got["example_3_2_M1"], got["thm_2_11_Zloc5"], got["pruefer_Z5"]
    named = [
        e26["pradical"] == "yes",
        e26["primeful"] == "no",
        e26["mradical"] == "yes",
        e26["psi_image"] == "{all maximal}",
        m1["fullsemisimple"] == "no",
        zl["mradical"] == "yes",
        zl["pradical"] == "no",
        zl["pradical_failing"] == ["(0)"],
        zl["radical_colon_at_0"] == "(5)",
        pr["primeless"] == "yes",
        pr["psi_image"] == "{}",
    ]
    ok = not diff and all(named) and elapsed < GALLERY_SECONDS
    assert verdict("gallery", ok, f"{len(got)} rows, {len(diff)} mismatches, {sum(named)}/{len(named)} named verdicts, {elapsed:.2f}s"), diff


def test_oracle_equivalence(verdict):
    t0 = time.perf_counter()
    rep = harness.run_suite("oracle", SEED, 500)
    elapsed = time.perf_counter() - t0
    corpus = InstanceGenerator(SEED, Bounds()).finite_corpus(500)
    largest = max(m.order for m in corpus)
    kinds = {m.ring.kind for m in corpus}
    ok = rep.passed and rep.trials >= 500 and largest <= MAX_ORDER and kinds == {Z, ZMODN} and elapsed < ORACLE_SECONDS
    assert verdict("oracle", ok, f"{_summary(rep)}, max |M| = {largest}, wall {elapsed:.1f}s"), rep.failures[:3]


def test_prop21_prop29_equivalence(verdict):
    r21 = harness.run_suite("prop_2_1", SEED, 500)
    r29 = harness.run_suite("prop_2_9", SEED, 500)
    shared = min(r21.parts.get("finite corpus", 0), r29.parts.get("finite corpus", 0))
    ok = r21.passed and r29.passed and shared >= 500
    detail = f"prop_2_1 {_summary(r21)}; prop_2_9 {_summary(r29)}"
    assert verdict("prop_2_1/prop_2_9", ok, detail), (r21.failures[:3], r29.failures[:3])


def test_fg_and_zmod_families(verdict):
    rep = harness.run_suite("cor_2_4", SEED, 500)
    counts = [rep.parts.get(k, 0) for k in ("Z presented", "Z/n presented", "Z/n symbolic")]
    ok = rep.passed and min(counts) >= 500
    assert verdict("cor_2_4/thm_2_13", ok, _summary(rep)), rep.failures[:3]


def test_thm211_dichotomy(verdict):
    rep = harness.run_suite("thm_2_11", SEED, 1000)
    m = symmod.construct_thm211(zloc(5))
    p = symmod.check_p_radical(m)
    certified = (
        symmod.check_m_radical(m).verdict
        and not p.verdict
        and [c.label() for c in p.failing()] == ["(0)"]
        and str(symmod.radical_colon(m, 0)) == "(5)"
    )
    ok = rep.passed and rep.parts.get("Hilbert rings", 0) >= 1000 and certified
    assert verdict("thm_2_11", ok, f"{_summary(rep)}, Z_(5) construction certified: {certified}"), rep.failures[:3]


def test_semisimple_suite(verdict):
    rep = harness.run_suite("semisimple", SEED, 500)
    kinds = ("finite", "cofinite", "mixed")
    ok = rep.passed and rep.trials >= 500 and all(rep.parts.get(k, 0) > 0 for k in kinds)
    assert verdict("semisimple", ok, _summary(rep)), rep.failures[:3]


def test_nakayama_and_radical_formula(verdict):
    nak = harness.run_suite("nakayama", SEED, 200)
    rf = harness.run_suite("radical_formula", SEED, 200)
    z = integers()
    m = FinPresModule.direct_sum(z, [0, 4])
    fails_at_zero = not fgmod.check_radical_formula(m, ideal(z, 0))
    pradical = fgmod.check_p_radical(m).verdict
    z12 = FinPresModule.cyclic(z, 12)
    torsion_holds = all(fgmod.check_radical_formula(z12, i) for i in fgmod.ideals_over_ann(z12))
    ok = nak.passed and rf.passed and fails_at_zero and pradical and torsion_holds
    detail = (
        f"nakayama {_summary(nak)}; radical formula {_summary(rf)}; "
        f"Z+Z/4 at (0) fails: {fails_at_zero}, prime-radical: {pradical}; Z/12 holds: {torsion_holds}"
    )
    assert verdict("nakayama/radical_formula", ok, detail), (nak.failures[:3], rf.failures[:3])


def test_topology(verdict):
    rep = harness.run_suite("topology", SEED, 500)
    ok = rep.passed and rep.parts.get("finite corpus", 0) >= 500 and rep.parts.get("closed-set triples", 0) >= 10**4
    assert verdict("topology", ok, _summary(rep)), rep.failures[:3]
