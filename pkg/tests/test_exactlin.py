from math import prod

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from pradical.exactlin import (
    AmbientMismatch,
    IntegerLattice,
    IntMatrix,
    hnf,
    kernel,
    saturate,
    smith_decomposition,
    snf,
    solve,
)

entries = st.integers(-30, 30)


@st.composite
def matrices(draw, max_dim=4):
    r = draw(st.integers(1, max_dim))
    c = draw(st.integers(1, max_dim))
    return IntMatrix.from_rows([[draw(entries) for _ in range(c)] for _ in range(r)])


@st.composite
def lattices(draw, n=None):
    n = n or draw(st.integers(1, 4))
    k = draw(st.integers(0, 4))
    return IntegerLattice.from_generators([[draw(entries) for _ in range(n)] for _ in range(k)], n)


def sympy_factors(m: IntMatrix) -> list[int]:
    s = smith_normal_form(Matrix(m.to_rows()), domain=ZZ)
    return sorted((abs(int(s[i, i])) for i in range(min(s.shape))), key=lambda d: (d == 0, d))


def test_snf_example():
    s, factors = snf(IntMatrix.from_rows([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]))
    assert factors == [2, 6, 12]


def test_hnf_is_canonical_for_same_lattice():
    a = hnf(IntMatrix.from_columns([[2, 0], [0, 3]], 2))
    b = hnf(IntMatrix.from_columns([[2, 3], [4, 3], [0, 6]], 2))
    assert b.to_rows() == [[2, 0, 0], [0, 3, 0]]
    assert a.columns() == b.columns()[:2]


@given(matrices())
def test_smith_decomposition_identity(m):
    d = smith_decomposition(m)
    assert d.left @ m @ d.right == d.smith
    assert d.left @ d.left_inverse == IntMatrix.identity(m.rows)
    f = d.invariant_factors
    nz = [x for x in f if x]
    assert all(x > 0 for x in nz)
    assert all(b % a == 0 for a, b in zip(nz, nz[1:]))
    assert f == nz + [0] * (len(f) - len(nz))


@given(matrices())
def test_smith_factors_match_sympy(m):
    assert smith_decomposition(m).invariant_factors == sympy_factors(m)


@given(matrices())
def test_kernel_is_annihilated(m):
    k = kernel(m)
    for col in k.columns():
        assert m.apply(col) == [0] * m.rows


@given(lattices(3), lattices(3))
def test_lattice_sum_and_intersection(a, b):
    s, i = a + b, a & b
    assert a <= s and b <= s
    assert i <= a and i <= b
    assert a + a == a and a & a == a


@given(lattices(3), st.lists(entries, min_size=3, max_size=3))
def test_solve_reconstructs(l, v):
    c = solve(l, v)
    if c is None:
        return
    assert l.basis.apply(c) == v


@given(lattices())
def test_saturation(l):
    s = saturate(l)
    assert l <= s and s.rank == l.rank
    assert saturate(s) == s
    if s.rank == s.ambient_rank:
        assert s == IntegerLattice.ambient(s.ambient_rank)


def test_index_and_membership():
    l = IntegerLattice.from_generators([[2, 0], [1, 3]], 2)
    assert l.index() == 6
    assert [3, 3] in l and [1, 0] not in l
    assert IntegerLattice.from_generators([[1, 1]], 2).index() is None


def test_index_equals_product_of_factors():
    rows = [[4, 2, 0], [0, 6, 3], [2, 0, 9]]
    l = IntegerLattice.from_generators(IntMatrix.from_rows(rows).columns(), 3)
    assert l.index() == prod(snf(IntMatrix.from_rows(rows))[1])


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        IntegerLattice.ambient(2) + IntegerLattice.ambient(3)


def test_big_integers_survive():
    big = 10**40 + 7
    l = IntegerLattice.from_generators([[big, 0], [0, big * 3]], 2)
    assert l.index() == 3 * big * big
    assert [big, 3 * big] in l
