import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pradical import fgmod
from pradical.errors import PreconditionError, UnsupportedError
from pradical.fgmod import FinPresModule
from pradical.oracle import finite_oracle
from pradical.rings import field_, ideal, integers, zmod

Z = integers()

# (orders, ring, submodule count, prime submodule count, realized colons,
#  generators of the prime radical of 0); counts from subgroup enumeration
FROZEN = [
    ([12], Z, 6, 2, [2, 3], [[6]]),
    ([4, 2], Z, 8, 4, [2], [[2, 0], [0, 2]]),
    ([6, 6], Z, 30, 9, [2, 3], [[6, 0], [0, 6]]),
    ([2, 2, 2], Z, 16, 15, [2], [[2, 0, 0], [0, 2, 0], [0, 0, 2]]),
    ([8], Z, 4, 1, [2], [[2]]),
    ([9, 3], Z, 10, 5, [3], [[3, 0], [0, 3]]),
    ([0], zmod(12), 6, 2, [2, 3], [[6]]),
    ([4], zmod(8), 3, 1, [2], [[2]]),
]


@pytest.mark.parametrize("orders,ring,count,nprimes,colons,rad0", FROZEN)
def test_frozen_oracle_values(orders, ring, count, nprimes, colons, rad0):
    m = FinPresModule.direct_sum(ring, orders)
    o = finite_oracle(m)
    assert o.count == count
    assert len(o.prime_indices()) == nprimes
    assert sorted(o.realized_colons()) == colons
    want = m.submodule(rad0)
    assert fgmod.prime_radical(m.zero()) == want
    assert o.prime_radical(m.zero()) == want


@pytest.mark.parametrize("orders", [[12], [2, 4], [6, 6], [4, 8], [3, 9], [2, 2, 2]])
def test_closed_forms_match_enumeration(orders):
    m = FinPresModule.direct_sum(Z, orders)
    o = finite_oracle(m)
    for n in o.submodules():
        assert fgmod.is_prime_submodule(n) == o.is_prime(n)
        assert fgmod.prime_radical(n) == o.prime_radical(n)
        assert fgmod.colon(n) == o.colon(n)


@st.composite
def finite_modules(draw):
    ring = draw(st.sampled_from([Z, zmod(12), zmod(30), zmod(8)]))
    n = draw(st.integers(1, 3))
    rows = [[draw(st.integers(-12, 12)) for _ in range(n)] for _ in range(n)]
    m = FinPresModule.from_relations(ring, n, rows)
    if not m.is_finite or m.order > 3000:
        m = FinPresModule.direct_sum(ring, [draw(st.sampled_from([2, 3, 4, 6]))])
    return m


@settings(max_examples=40)
@given(finite_modules(), st.data())
def test_random_presentations_match_enumeration(m, data):
    o = finite_oracle(m)
    s = data.draw(st.integers(0, o.count - 1))
    n = o.lattice_of(s)
    assert fgmod.is_prime_submodule(n) == o.is_prime(n)
    assert fgmod.prime_radical(n) == o.prime_radical(n)


def test_infinite_module_radical():
    m = FinPresModule.direct_sum(Z, [0, 4])
    rad = fgmod.prime_radical(m.zero())
    assert rad == m.submodule([[0, 2]])
    assert fgmod.colon(rad).is_zero
    assert fgmod.is_prime_submodule(m.torsion()) == (True, ideal(Z, 0))
    assert not fgmod.check_radical_formula(m, ideal(Z, 0))
    assert fgmod.check_p_radical(m).verdict


def test_structure_and_invariants():
    m = FinPresModule.from_relations(Z, 2, [[2, 4], [6, 8]])
    assert m.invariant_factors == (2, 4) and m.order == 8
    assert m.structure() == "Z/2 + Z/4"
    assert FinPresModule.direct_sum(Z, [0, 0]).free_rank == 2
    assert FinPresModule.cyclic(zmod(12), 0).order == 12
    assert FinPresModule.from_relations(Z, 1, [[1]]).is_zero


def test_annihilator_and_colon():
    m = FinPresModule.direct_sum(Z, [4, 6])
    assert fgmod.ann(m).gen == 12
    assert fgmod.colon(m.scaled(2)).gen == 2
    assert fgmod.ann(FinPresModule.direct_sum(Z, [0])).is_zero


def test_primes_over_ann_generic_class():
    explicit, generic = fgmod.primes_over_ann(FinPresModule.direct_sum(Z, [0, 6]))
    assert explicit == [0, 2, 3]
    assert generic is not None and 5 in generic and 3 not in generic


def test_property_certificates():
    for m in [FinPresModule.cyclic(Z, 12), FinPresModule.direct_sum(Z, [0, 4]), FinPresModule.direct_sum(zmod(8), [2, 0])]:
        for fn in (fgmod.check_primeful, fgmod.check_p_radical, fgmod.check_m_radical, fgmod.colon_equality):
            assert fn(m).verdict
    zero = FinPresModule.from_relations(Z, 1, [[1]])
    assert fgmod.check_primeful(zero).verdict and fgmod.check_primeful(zero).per_prime == ()


def test_maximal_submodule_over():
    m = FinPresModule.direct_sum(Z, [0, 6])
    for p in (2, 3, 5):
        w = fgmod.maximal_submodule_over(m, p)
        assert w.quotient_factors == (p,) and w.quotient_free_rank == 0
        assert fgmod.colon(w) == ideal(Z, p)
    assert fgmod.maximal_submodule_over(FinPresModule.cyclic(Z, 9), 2) is None


def test_multiplication_modules():
    assert fgmod.is_multiplication(FinPresModule.cyclic(Z, 12))
    assert fgmod.is_multiplication(FinPresModule.cyclic(Z, 0))
    assert not fgmod.is_multiplication(FinPresModule.direct_sum(Z, [2, 2]))
    with pytest.raises(UnsupportedError):
        fgmod.is_multiplication(FinPresModule.direct_sum(Z, [0, 2]))


def test_radical_formula_precondition():
    m = FinPresModule.cyclic(Z, 12)
    assert fgmod.check_radical_formula(m, ideal(Z, 4))
    with pytest.raises(PreconditionError):
        fgmod.check_radical_formula(m, ideal(Z, 5))


def test_other_rings_rejected():
    with pytest.raises(UnsupportedError):
        FinPresModule.from_relations(field_(5), 1, [])


def test_zmod_requires_torsion_relations():
    with pytest.raises(ValueError):
        FinPresModule(zmod(6), 1, FinPresModule.from_relations(Z, 1, []).relations)
