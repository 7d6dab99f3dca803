import pytest
from hypothesis import given
from hypothesis import strategies as st

from pradical.rings import (
    PrimeSet,
    RingError,
    field_,
    ideal,
    ideal_intersection,
    ideal_product,
    ideal_sum,
    integers,
    is_hilbert,
    is_maximal_ideal,
    is_prime_ideal,
    next_prime_not_in,
    primes_containing,
    quotient_dim,
    quotient_is_hilbert,
    radical_ideal,
    ring_facts,
    spectrum,
    zloc,
    zmod,
)

Z = integers()


def test_normalization():
    assert ideal(zmod(12), 8).gen == 4
    assert ideal(zmod(12), 0).gen == 12 and ideal(zmod(12), 0).is_zero
    assert ideal(zloc(5), 50).gen == 25
    assert ideal(zloc(5), 3).is_unit
    assert ideal(field_(7), 3).is_unit
    assert ideal(Z, -6).gen == 6


def test_bad_rings():
    with pytest.raises(RingError):
        zloc(6)
    with pytest.raises(RingError):
        field_(4)
    with pytest.raises(RingError):
        zmod(1)


def test_spectra():
    assert str(spectrum(Z)) == "{(0), all maximal}"
    assert list(spectrum(zmod(12))) == [2, 3]
    assert list(spectrum(zloc(5))) == [0, 5]
    assert list(spectrum(field_(3))) == [0]


def test_hilbert_and_dimension():
    assert [is_hilbert(r) for r in (Z, zmod(4), field_(2), zloc(3))] == [True, True, True, False]
    assert [ring_facts(r).krull_dim for r in (Z, zmod(12), zloc(5), field_(5))] == [1, 0, 1, 0]
    assert ring_facts(zmod(12)).jacobson_radical.gen == 6
    assert quotient_dim(Z, ideal(Z, 0)) == 1 and quotient_dim(Z, ideal(Z, 6)) == 0
    assert quotient_dim(Z, ideal(Z, 1)) == -1
    assert not quotient_is_hilbert(zloc(5), ideal(zloc(5), 0))
    assert quotient_is_hilbert(zloc(5), ideal(zloc(5), 5))


def test_prime_and_maximal():
    assert is_prime_ideal(ideal(Z, 0)) and not is_maximal_ideal(ideal(Z, 0))
    assert is_maximal_ideal(ideal(zmod(12), 3)) and not is_prime_ideal(ideal(zmod(12), 6))
    assert is_maximal_ideal(ideal(field_(3), 0))


@given(st.integers(0, 500), st.integers(0, 500))
def test_ideal_arithmetic_over_z(a, b):
    i, j = ideal(Z, a), ideal(Z, b)
    assert ideal_product(i, j) <= ideal_intersection(i, j) <= i
    assert i <= ideal_sum(i, j) and j <= ideal_sum(i, j)
    r = radical_ideal(Z, i)
    assert i <= r and radical_ideal(Z, r) == r


@given(st.integers(2, 200), st.integers(0, 400))
def test_radical_in_zmod(n, g):
    r = zmod(n)
    i = ideal(r, g)
    rad = radical_ideal(r, i)
    assert i <= rad
    assert rad == PrimeSet.finite(r, primes_containing(r, i)).intersection_ideal()


def test_prime_sets():
    a = PrimeSet.all_maximals(Z, [2, 3])
    b = PrimeSet.finite(Z, [2, 5])
    assert 5 in a and 2 not in a and 0 not in a
    assert a.union(b) == PrimeSet.all_maximals(Z, [3])
    assert a.intersection(b) == PrimeSet.finite(Z, [5])
    assert a.with_zero().has_zero and not a.with_zero().with_zero(False).has_zero
    assert a.intersection_ideal().is_zero
    assert PrimeSet.finite(Z, [2, 3]).intersection_ideal().gen == 6
    assert PrimeSet.finite(Z).intersection_ideal().is_unit
    assert next_prime_not_in([2, 3, 7]) == 5
    with pytest.raises(RingError):
        PrimeSet.finite(Z, [4])
