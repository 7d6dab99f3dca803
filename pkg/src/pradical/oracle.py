"""Brute-force reference for finite modules: list every submodule and test
primality straight from the definition.

Nothing here uses the closed forms of ``fgmod``; the two are compared in the
test-suite and by the ``oracle`` harness suite.  Submodules of
``G = Z/d_0 x ... x Z/d_{k-1}`` are in bijection with lattices between
``D Z^k`` and ``Z^k``, which are enumerated through their lower-triangular
Hermite bases, one column at a time from the last.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

import numpy as np
from sympy import divisors

from . import _kernels
from .errors import BoundExceeded, PreconditionError
from .exactlin import IntegerLattice
from .rings import IdealDescriptor, ideal


@dataclass
class FiniteOracle:
    module: object
    bound: int
    backend: str | None = None
    full_multipliers: bool = False
    _scan: tuple | None = field(default=None, repr=False)
    _prime_masks: np.ndarray | None = field(default=None, repr=False)

    def __post_init__(self):
        m = self.module
        if not m.is_finite:
            raise PreconditionError("the brute-force oracle needs a finite module")
        dec = m.smith
        diag = dec.invariant_factors + [0] * (m.n_gens - len(dec.invariant_factors))
        self.positions = [i for i, d in enumerate(diag) if d > 1]
        self.moduli = np.array([diag[i] for i in self.positions], dtype=np.int64)
        self.left = dec.left.to_rows()
        self.left_inverse = dec.left_inverse
        k = len(self.positions)
        self.k = k
        self.size = int(np.prod(self.moduli)) if k else 1
        strides = np.ones(k, dtype=np.int64)
        for i in range(k - 2, -1, -1):
            strides[i] = strides[i + 1] * self.moduli[i + 1]
        self.strides = strides
        if k:
            self.coords = np.indices(tuple(int(d) for d in self.moduli), dtype=np.int64).reshape(k, -1).T.copy()
        else:
            self.coords = np.zeros((1, 0), dtype=np.int64)
        self.exponent = int(self.moduli[-1]) if k else 1
        if self.full_multipliers:
            self.rs = np.arange(1, self.exponent + 1, dtype=np.int64)
        else:
            self.rs = np.array(divisors(self.exponent), dtype=np.int64)
        self.mult = np.stack([(self.coords * r % self.moduli) @ self.strides for r in self.rs]) if k else np.zeros((len(self.rs), 1), dtype=np.int64)
        self.weights = _kernels.element_weights(self.size)
        self.H = self._enumerate()

    # -- enumeration ------------------------------------------------------

    def _enumerate(self) -> np.ndarray:
        k, d = self.k, [int(x) for x in self.moduli]
        valid = _kernels.kernel("valid_columns", self.backend)
        out: list[np.ndarray] = []

        def rec(j: int, block: np.ndarray):
            # ``block`` holds the columns j+1..k-1 restricted to rows j+1..k-1
            if j < 0:
                out.append(block)
                if len(out) > self.bound:
                    raise BoundExceeded(f"more than {self.bound} submodules")
                return
            hs = np.diagonal(block).copy() if block.size else np.zeros(0, dtype=np.int64)
            for h in divisors(d[j]):
                tails = valid(block, hs, d[j] // h)
                for a in tails:
                    nb = np.zeros((k - j, k - j), dtype=np.int64)
                    nb[0, 0] = h
                    nb[1:, 0] = a
                    nb[1:, 1:] = block
                    rec(j - 1, nb)

        if k == 0:
            return np.zeros((1, 0, 0), dtype=np.int64)
        rec(k - 1, np.zeros((0, 0), dtype=np.int64))
        return np.stack(out)

    @property
    def count(self) -> int:
        return self.H.shape[0]

    # -- translation between lattices and masks ---------------------------

    def coordinates(self, x) -> np.ndarray:
        y = [sum(u * v for u, v in zip(row, x)) for row in self.left]
        return np.array([y[i] % int(self.moduli[t]) for t, i in enumerate(self.positions)], dtype=np.int64)

    def mask_of(self, n) -> np.ndarray:
        gens = [self.coordinates(g) for g in n.generators()]
        g = np.stack(gens, axis=1) if gens else np.zeros((self.k, 0), dtype=np.int64)
        return np.asarray(_kernels.kernel("closure", self.backend)(g, self.moduli, self.strides, self.coords, self.size))

    def lattice_of(self, s: int):
        from .fgmod import Submodule

        m = self.module
        cols = []
        for c in self.H[s].T:
            y = [0] * m.n_gens
            for t, i in enumerate(self.positions):
                y[i] = int(c[t])
            cols.append(self.left_inverse.apply(y))
        return Submodule(m, IntegerLattice.from_generators(m.relations.generators() + cols, m.n_gens))

    def submodules(self) -> Iterator:
        for s in range(self.count):
            yield self.lattice_of(s)

    # -- definitional scan ------------------------------------------------

    def scan(self):
        if self._scan is None:
            fn = _kernels.kernel("scan", self.backend)
            res = fn(self.H, self.moduli, self.strides, self.coords, self.size, self.rs, self.mult, self.weights)
            self._scan = tuple(np.asarray(x) for x in res)
        return self._scan

    def index_of(self, mask: np.ndarray) -> int:
        _, _, hashes, orders = self.scan()
        h = self.weights[mask].sum(dtype=np.uint64)
        hits = np.nonzero((hashes == h) & (orders == int(mask.sum())))[0]
        if len(hits) != 1:
            raise RuntimeError("subgroup hash lookup failed")
        return int(hits[0])

    def is_prime(self, n) -> tuple[bool, IdealDescriptor | None]:
        is_prime, colon, _, _ = self.scan()
        s = self.index_of(self.mask_of(n))
        if not is_prime[s]:
            return False, None
        return True, ideal(self.module.ring, int(colon[s]))

    def colon(self, n) -> IdealDescriptor:
        _, colon, _, _ = self.scan()
        return ideal(self.module.ring, int(colon[self.index_of(self.mask_of(n))]))

    # -- the same queries addressed by enumeration index ---------------------

    def mask_at(self, s: int) -> np.ndarray:
        fn = _kernels.kernel("closure", self.backend)
        return np.asarray(fn(self.H[s], self.moduli, self.strides, self.coords, self.size))

    def prime_at(self, s: int) -> tuple[bool, IdealDescriptor | None]:
        is_prime, colon, _, _ = self.scan()
        if not is_prime[s]:
            return False, None
        return True, ideal(self.module.ring, int(colon[s]))

    def colon_at(self, s: int) -> IdealDescriptor:
        return ideal(self.module.ring, int(self.scan()[1][s]))

    def prime_masks(self) -> np.ndarray:
        """Element masks of all prime submodules, one row each (computed once)."""
        if self._prime_masks is None:
            rows = [self.mask_at(s) for s in self.prime_indices()]
            self._prime_masks = np.stack(rows) if rows else np.zeros((0, self.size), dtype=np.bool_)
        return self._prime_masks

    def radical_mask_at(self, s: int) -> np.ndarray:
        """Element mask of the intersection of all prime submodules above submodule ``s``."""
        pm = self.prime_masks()
        above = pm[:, self.mask_at(s)].all(axis=1)
        if not above.any():
            return np.ones(self.size, dtype=np.bool_)
        return pm[above].all(axis=0)

    def prime_indices(self) -> np.ndarray:
        return np.nonzero(self.scan()[0])[0]

    def primes(self) -> list[tuple[object, IdealDescriptor]]:
        colon = self.scan()[1]
        return [(self.lattice_of(s), ideal(self.module.ring, int(colon[s]))) for s in self.prime_indices()]

    def primes_over(self, n) -> list[IdealDescriptor]:
        """Colons of the prime submodules that contain ``n`` (with repetition)."""
        above = self.prime_masks()[:, self.mask_of(n)].all(axis=1)
        colon = self.scan()[1]
        return [ideal(self.module.ring, int(colon[s])) for s in self.prime_indices()[above]]

    def prime_radical(self, n):
        nmask = self.mask_of(n)
        chosen = self.prime_indices().astype(np.int64)
        fn = _kernels.kernel("intersect", self.backend)
        acc = np.asarray(fn(self.H, chosen, self.moduli, self.strides, self.coords, self.size, nmask))
        return self.lattice_of(self.index_of(acc))

    def realized_colons(self) -> set[int]:
        _, colon, _, _ = self.scan()
        return {int(colon[s]) for s in self.prime_indices()}


@lru_cache(maxsize=64)
def finite_oracle(module, bound: int = 20000, backend: str | None = None, full_multipliers: bool = False) -> FiniteOracle:
    return FiniteOracle(module, bound, backend, full_multipliers)
