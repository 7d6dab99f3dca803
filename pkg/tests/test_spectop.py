import pytest
from hypothesis import given
from hypothesis import strategies as st

from pradical import fgmod, symmod
from pradical.errors import PreconditionError
from pradical.fgmod import FinPresModule
from pradical.oracle import finite_oracle
from pradical.rings import PrimeSet, field_, ideal, ideal_product, ideal_sum, integers, radical_ideal, zloc, zmod
from pradical.spectop import ClosedSetR, d_basic, psi_dot, psi_image, psi_surjective, v_ideal, v_submodule

Z = integers()
RINGS = [Z, zmod(12), zmod(30), zloc(5), field_(3)]


def test_closed_set_shapes():
    assert v_ideal(Z, ideal(Z, 0)).render() == "whole"
    assert v_ideal(Z, ideal(Z, 1)).render() == "empty"
    assert v_ideal(Z, ideal(Z, 12)).render() == "(2),(3)"
    assert v_ideal(zmod(12), ideal(zmod(12), 6)).render() == "whole"
    assert v_ideal(zloc(5), ideal(zloc(5), 25)).render() == "(5)"
    assert 0 in v_ideal(Z, ideal(Z, 0)) and 0 not in v_ideal(Z, ideal(Z, 6))


def test_open_sets():
    d = d_basic(Z, 6)
    assert 5 in d and 2 not in d and 0 in d
    assert d_basic(Z, 1).is_whole and d_basic(Z, 0).is_empty


def test_mixed_rings_rejected():
    with pytest.raises(PreconditionError):
        ClosedSetR.whole(Z) | ClosedSetR.whole(zmod(4))


@given(st.sampled_from(RINGS), st.integers(0, 300), st.integers(0, 300))
def test_v_of_products_and_sums(r, a, b):
    i, j = ideal(r, a), ideal(r, b)
    assert v_ideal(r, i) | v_ideal(r, j) == v_ideal(r, ideal_product(i, j))
    assert v_ideal(r, i) & v_ideal(r, j) == v_ideal(r, ideal_sum(i, j))
    assert v_ideal(r, radical_ideal(r, i)) == v_ideal(r, i)


def test_psi_image():
    assert str(psi_image(symmod.construct_prop27(Z))) == "{all maximal}"
    assert str(psi_image(symmod.pruefer_module(Z, 5))) == "{}"
    assert str(psi_image(FinPresModule.direct_sum(Z, [0, 4]))) == "{(0), all maximal}"
    assert psi_image(FinPresModule.cyclic(Z, 12)) == PrimeSet.finite(Z, [2, 3])
    assert not psi_surjective(symmod.construct_prop27(Z))
    assert psi_surjective(FinPresModule.cyclic(Z, 12))


@pytest.mark.parametrize("orders", [[12], [4, 2], [6, 6]])
def test_v_of_radical(orders):
    m = FinPresModule.direct_sum(Z, orders)
    o = finite_oracle(m)
    primes = o.primes()
    for n in o.submodules():
        a = [str(p) for p, _ in v_submodule(n).members(primes)]
        b = [str(p) for p, _ in v_submodule(fgmod.prime_radical(n)).members(primes)]
        assert a == b
        # V(N) is cut out by colons, so it contains every prime above N
        contained = [str(p) for p, _ in primes if n <= p]
        assert set(contained) <= set(a)


@pytest.mark.parametrize("orders", [[12], [4, 2], [6, 6]])
def test_v_of_ideal_multiple_is_containment(orders):
    m = FinPresModule.direct_sum(Z, orders)
    o = finite_oracle(m)
    primes = o.primes()
    for i in fgmod.ideals_over_ann(m):
        n = m.ideal_times(i)
        a = sorted(str(p) for p, _ in v_submodule(n).members(primes))
        assert a == sorted(str(p) for p, _ in primes if n <= p)


def test_dot_output():
    dot = psi_dot(FinPresModule.cyclic(Z, 6))
    assert dot.startswith("digraph psi {") and '"(2)"' in dot and '"(3)"' in dot
