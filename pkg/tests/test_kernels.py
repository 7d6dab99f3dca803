import numpy as np
import pytest

from pradical import _kernels
from pradical.fgmod import FinPresModule
from pradical.oracle import FiniteOracle
from pradical.rings import integers, zmod

CASES = [[12], [2, 4], [6, 6], [2, 2, 2], [3, 9], [4, 8]]


@pytest.mark.parametrize("orders", CASES)
def test_backends_agree_on_scan(orders):
    m = FinPresModule.direct_sum(integers(), orders)
    a = FiniteOracle(m, 20000, backend="numpy")
    b = FiniteOracle(m, 20000, backend="numba")
    assert np.array_equal(a.H, b.H)
    for x, y in zip(a.scan(), b.scan()):
        assert np.array_equal(x, y)


@pytest.mark.parametrize("orders", CASES)
def test_backends_agree_on_radicals(orders):
    m = FinPresModule.direct_sum(integers(), orders)
    a = FiniteOracle(m, 20000, backend="numpy")
    b = FiniteOracle(m, 20000, backend="numba")
    for s in range(0, a.count, max(1, a.count // 10)):
        n = a.lattice_of(s)
        assert a.prime_radical(n) == b.prime_radical(n)


def test_closure_is_a_subgroup():
    m = FinPresModule.direct_sum(zmod(12), [0, 6])
    o = FiniteOracle(m, 20000)
    for backend in ("numpy", "numba"):
        fn = _kernels.kernel("closure", backend)
        gens = np.array([[2], [3]], dtype=np.int64)
        mask = np.asarray(fn(gens, o.moduli, o.strides, o.coords, o.size))
        # Smith coordinates are Z/6 x Z/12, where (2,3) has order 12
        assert mask.sum() == 12
        assert mask[0]


def test_backend_flag():
    assert _kernels.BACKEND in ("numba", "numpy")
    assert _kernels.kernel("scan", "numpy") is _kernels.np_scan
