import json

import pytest

from pradical import harness, symmod
from pradical.errors import PreconditionError
from pradical.fgmod import FinPresModule
from pradical.harness import Bounds, InstanceGenerator, run_checks, shrink
from pradical.rings import integers, zmod
from pradical.serialize import module_from_json, module_to_json

Z = integers()


def test_generator_is_deterministic():
    a = InstanceGenerator(7).finite_corpus(30)
    b = InstanceGenerator(7).finite_corpus(30)
    c = InstanceGenerator(8).finite_corpus(30)
    assert a == b and a != c


def test_generator_respects_bounds():
    g = InstanceGenerator(3, Bounds(max_gens=3, max_order=500))
    for m in g.finite_corpus(60):
        assert m.n_gens <= 3 and m.is_finite and m.order <= 500


@pytest.mark.parametrize("suite", ["prop_2_9", "nakayama", "semisimple", "thm_2_11"])
def test_reports_are_reproducible(suite):
    a = harness.run_suite(suite, seed=11, trials=25).to_json(timing=False)
    b = harness.run_suite(suite, seed=11, trials=25).to_json(timing=False)
    assert json.dumps(a) == json.dumps(b)
    assert a["suite"] == suite and a["seed"] == 11 and a["failures"] == []


def _planted(m):
    """A deliberately false claim: no module has an element of order 4."""
    if isinstance(m, FinPresModule) and m.is_finite and m.exponent % 4 == 0:
        return "element of order 4"
    return None


def test_shrinking_is_sound():
    corpus = InstanceGenerator(5).finite_corpus(40)
    rep = run_checks("planted", corpus, _planted)
    assert rep.failures
    for f in rep.failures:
        shrunk = module_from_json(f["shrunk"])
        assert _planted(shrunk) is not None
        assert _planted(module_from_json(f["instance"])) is not None
        assert shrunk.n_gens <= module_from_json(f["instance"]).n_gens
    smallest = min(module_from_json(f["shrunk"]).n_gens for f in rep.failures)
    assert smallest == 1


def test_shrink_symbolic():
    m = symmod.SymbolicModule(Z, 2, (symmod.Cyclic(2, 3), symmod.Cyclic(3)))
    small, why = shrink(m, lambda x: "has 2^3" if any(c.p == 2 and c.k >= 2 for c in x.cyclics) else None)
    assert module_to_json(small)["cyclics"] == [{"p": "2", "k": "2", "mult": "1"}]
    assert small.free_rank == 0 and why == "has 2^3"


def test_single_instance_verifiers():
    assert harness.verify_prop21(FinPresModule.cyclic(Z, 12)).passed
    assert harness.verify_prop21(FinPresModule.direct_sum(Z, [4, 2])).passed
    assert harness.verify_prop21(FinPresModule.from_relations(Z, 1, [[1]])).passed
    with pytest.raises(PreconditionError):
        harness.verify_prop21(FinPresModule.cyclic(Z, 0))
    rep = harness.verify_prop29(symmod.construct_prop27(Z))
    assert rep.passed and rep.notes
    assert not any(harness.prop29_conditions(symmod.pruefer_module(Z, 5)).values())
    assert all(harness.prop29_conditions(FinPresModule.cyclic(Z, 12)).values())
    for m in (FinPresModule.cyclic(Z, 12), symmod.construct_prop27(Z), symmod.pruefer_module(Z, 5)):
        assert harness.verify_chain(m).passed
    assert harness.chain_values(symmod.construct_prop27(Z)) == {
        "primeful": False,
        "pradical": True,
        "colon": True,
        "mradical": True,
    }


def test_jacobson_ideals():
    assert [i.gen for i in harness.jacobson_ideals(zmod(8))] == [2, 4, 8]
    assert [i.gen for i in harness.jacobson_ideals(Z)] == [0]


def test_coverage_is_complete():
    reports = [harness.run_suite(name, seed=0, trials=3) for name in harness.SUITES]
    covered, missing = harness.coverage(reports)
    assert not missing, missing


def test_unknown_suite():
    with pytest.raises(KeyError):
        harness.run_suite("prop_9_9")
