import pytest
from hypothesis import given
from hypothesis import strategies as st

from pradical import fgmod, symmod
from pradical.errors import PreconditionError, UnsupportedError
from pradical.fgmod import FinPresModule
from pradical.rings import PrimeSet, field_, ideal, integers, zloc, zmod
from pradical.symmod import COUNTABLE, Cyclic, Family, Pruefer, SymbolicModule

Z = integers()


def verdicts(m):
    return (
        symmod.check_primeful(m).verdict,
        symmod.check_p_radical(m).verdict,
        symmod.check_m_radical(m).verdict,
    )


def test_sum_of_all_prime_fields():
    m = symmod.construct_prop27(Z)
    assert verdicts(m) == (False, True, True)
    assert symmod.ann(m).is_zero
    assert symmod.radical_colon(m, 0).is_zero
    assert [c.label() for c in symmod.check_primeful(m).failing()] == ["(0)"]
    assert symmod.is_full_semisimple(m)


def test_missing_two():
    m = symmod.simple_family_module(Z, [2])
    assert not symmod.is_full_semisimple(m)
    assert not symmod.check_m_radical(m).verdict
    assert [c.label() for c in symmod.check_m_radical(m).failing()] == ["(2)"]


def test_local_construction():
    m = symmod.construct_thm211(zloc(5))
    assert verdicts(m) == (False, False, True)
    bad = symmod.check_p_radical(m).failing()
    assert [c.prime for c in bad] == [ideal(zloc(5), 0)]
    assert symmod.radical_colon(m, 0) == ideal(zloc(5), 5)
    with pytest.raises(PreconditionError):
        symmod.construct_thm211(Z)


def test_pruefer_is_primeless():
    m = symmod.pruefer_module(Z, 5)
    assert symmod.is_primeless(m)
    assert verdicts(m) == (False, False, False)
    assert symmod.scales_onto(m, 5) and symmod.scales_onto(m, 10)


def test_scales_onto():
    m = symmod.pruefer_module(zloc(5), 5)
    assert symmod.scales_onto(m, 5)
    assert not symmod.scales_onto(m, 0)
    n = SymbolicModule(Z, 0, (Cyclic(3, 2),))
    assert symmod.scales_onto(n, 2) and not symmod.scales_onto(n, 6)


def test_annihilators():
    assert symmod.ann(SymbolicModule(Z, 0, (Cyclic(2, 2), Cyclic(3)))).gen == 12
    assert symmod.ann(SymbolicModule(Z, 0, families=(Family(PrimeSet.finite(Z, [5, 7])),))).gen == 35
    assert symmod.ann(SymbolicModule(Z, 1)).is_zero


def test_realized_colons():
    assert str(symmod.realized_colons(SymbolicModule(Z, 2))) == "{(0), all maximal}"
    assert list(symmod.realized_colons(SymbolicModule(field_(3), 2))) == [0]
    assert list(symmod.realized_colons(SymbolicModule(zmod(12), 0, (Cyclic(3),)))) == [3]


def test_semisimple_predicates():
    m = SymbolicModule(Z, 0, (Cyclic(2), Cyclic(3)))
    assert symmod.is_semisimple(m) and symmod.is_full_semisimple(m)
    assert not symmod.is_homogeneous_semisimple(m) and not symmod.is_prime_module(m)
    h = SymbolicModule(Z, 0, (Cyclic(5, 1, 3),))
    assert symmod.is_homogeneous_semisimple(h) and symmod.is_prime_module(h)
    assert not symmod.is_semisimple(SymbolicModule(Z, 0, (Cyclic(2, 2),)))
    assert not symmod.is_semisimple(SymbolicModule(Z, 1))
    assert symmod.is_semisimple(SymbolicModule(zmod(6), 2))
    with pytest.raises(PreconditionError):
        symmod.is_full_semisimple(SymbolicModule(Z, 1))


def test_validation():
    with pytest.raises((ValueError, UnsupportedError)):
        SymbolicModule(zmod(12), 0, (Cyclic(5),))
    with pytest.raises((ValueError, UnsupportedError)):
        SymbolicModule(zmod(12), 0, pruefer=(Pruefer(2),))
    with pytest.raises((ValueError, UnsupportedError)):
        SymbolicModule(field_(3), 0, (Cyclic(3),))


@given(
    st.sampled_from([0, 1, 2]),
    st.lists(st.tuples(st.sampled_from([2, 3, 5]), st.integers(1, 3)), max_size=3),
)
def test_agrees_with_finite_presentation(free, cyc):
    """Over Z, a symbolic sum of free and cyclic parts decides like its presentation."""
    s = SymbolicModule(Z, free, tuple(Cyclic(p, k) for p, k in cyc))
    f = FinPresModule.direct_sum(Z, [0] * free + [p ** k for p, k in cyc])
    assert verdicts(s) == (
        fgmod.check_primeful(f).verdict,
        fgmod.check_p_radical(f).verdict,
        fgmod.check_m_radical(f).verdict,
    )
    assert symmod.ann(s) == fgmod.ann(f)


def test_truncation_flags_pruefer_gap():
    m = SymbolicModule(Z, COUNTABLE, (Cyclic(3, 2, 4),), (Family(PrimeSet.finite(Z, [5, 101])),), (Pruefer(2),))
    t = symmod.truncate(m, prime_bound=97, rank_cap=2)
    assert t.pruefer_gap
    assert t.module.structure() == "Z/9 + Z/180 + Z + Z"
    assert not symmod.truncate(SymbolicModule(Z, 1), 97, 2).pruefer_gap
