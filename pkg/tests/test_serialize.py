import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pradical import fgmod, symmod
from pradical.errors import ParseError, UnsupportedError
from pradical.fgmod import FinPresModule
from pradical.harness import InstanceGenerator
from pradical.rings import PrimeSet, integers, zloc, zmod
from pradical.serialize import (
    certificate_from_json,
    certificate_to_json,
    ideal_from_json,
    ideal_to_json,
    module_from_json,
    module_to_json,
    prime_set_from_json,
    prime_set_to_json,
    submodule_from_json,
    submodule_to_json,
)

Z = integers()


def test_documented_forms_parse():
    m = module_from_json({"ring": {"kind": "Z"}, "kind": "finpres", "gens": 2, "relations": [[2, 0], [0, 12]]})
    assert m.structure() == "Z/2 + Z/12"
    s = module_from_json(
        {
            "ring": {"kind": "Z"},
            "kind": "symbolic",
            "free_rank": 0,
            "cyclics": [{"p": 3, "k": 2, "mult": 1}],
            "families": [{"primes": {"cofinite_except": [2]}}],
            "pruefer": [{"p": 5, "mult": 1}],
        }
    )
    assert str(s) == "R/(3^2) + sum R/(q), q in {all maximal except (2)} + Z(5^inf) over Z"
    n = submodule_from_json({"gens": [[2, 0]]}, m)
    assert n == m.submodule([[2, 0]])


@given(st.integers(0, 2**31))
def test_generated_modules_round_trip(seed):
    g = InstanceGenerator(seed)
    rng = g.rng("serialize")
    for m in (g.presentation(rng, finite=None), g.symbolic(rng)):
        text = json.dumps(module_to_json(m))
        assert module_from_json(json.loads(text)) == m


def test_big_integers_are_strings():
    big = 10**30 + 3
    m = FinPresModule.cyclic(Z, big)
    obj = module_to_json(m)
    assert obj["relations"] == [[str(big)]]
    assert module_from_json(obj).order == big


def test_prime_sets_and_ideals_round_trip():
    for s in [PrimeSet.all_maximals(Z, [2, 3]).with_zero(), PrimeSet.finite(Z, [0, 7]), PrimeSet.finite(zmod(30), [2, 5])]:
        assert prime_set_from_json(prime_set_to_json(s), s.ring) == s
    i = fgmod.ann(FinPresModule.cyclic(Z, 12))
    assert ideal_from_json(ideal_to_json(i)) == i


def test_certificates_round_trip():
    for m in (FinPresModule.direct_sum(Z, [0, 6]), symmod.construct_prop27(Z), symmod.construct_thm211(zloc(3))):
        mod = fgmod if isinstance(m, FinPresModule) else symmod
        for fn in (mod.check_primeful, mod.check_p_radical, mod.check_m_radical):
            c = fn(m)
            assert certificate_from_json(json.loads(json.dumps(certificate_to_json(c, m.ring)))) == c


def test_submodule_round_trip():
    m = FinPresModule.direct_sum(Z, [0, 4])
    n = fgmod.prime_radical(m.zero())
    assert submodule_from_json(submodule_to_json(n), m) == n


@pytest.mark.parametrize(
    "obj,field",
    [
        ({"kind": "finpres"}, "module.ring"),
        ({"ring": {"kind": "Q"}, "kind": "finpres", "gens": 1}, "module.ring.kind"),
        ({"ring": {"kind": "Z"}, "kind": "finpres", "gens": "x"}, "module.gens"),
        ({"ring": {"kind": "Z"}, "kind": "finpres", "gens": 2, "relations": [[1]]}, "module.relations[0]"),
        ({"ring": {"kind": "ZmodN", "n": "1"}, "kind": "finpres", "gens": 1}, "module.ring"),
        ({"ring": {"kind": "Z"}, "kind": "symbolic", "cyclics": [{"p": 4}]}, "module"),
        ({"ring": {"kind": "Z"}, "kind": "other"}, "module.kind"),
        ({"ring": {"kind": "Z"}, "kind": "finpres", "gens": True}, "module.gens"),
    ],
)
def test_parse_errors_name_the_field(obj, field):
    with pytest.raises(ParseError, match=field.replace("[", r"\[").replace("]", r"\]")):
        module_from_json(obj)


def test_finpres_over_local_ring_unsupported():
    with pytest.raises(UnsupportedError):
        module_from_json({"ring": {"kind": "ZlocP", "p": 5}, "kind": "finpres", "gens": 1})
