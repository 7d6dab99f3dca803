"""Hot loops of the brute-force oracle over finite abelian groups.

A finite module is handled in Smith coordinates ``G = Z/d_0 x ... x Z/d_{k-1}``
with elements numbered in mixed radix (last coordinate fastest).  Each kernel
exists twice: a numba ``@njit`` version and a plain numpy version.  The
environment variable ``PRADICAL_BACKEND`` (``numba`` or ``numpy``) picks the
one bound to the public names; numba is used when importable unless
``PRADICAL_BACKEND=numpy``.  Both versions are always importable under
their ``nb_``/``np_`` names so they can be compared directly.
"""
from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

_requested = os.environ.get("PRADICAL_BACKEND", "numba").strip().lower()
if _requested not in ("numba", "numpy"):
    raise ImportError(f"PRADICAL_BACKEND must be 'numba' or 'numpy', not {_requested!r}")
BACKEND = "numba" if (_requested == "numba" and numba is not None) else "numpy"


def _njit(fn):
    if numba is None:
        return fn
    return numba.njit(cache=True, nogil=True)(fn)


def element_weights(size: int) -> np.ndarray:
    """Fixed pseudo-random 64-bit weights; a subgroup's hash is the wrapped sum."""
    rng = np.random.default_rng(0x5EED)
    return rng.integers(0, np.iinfo(np.uint64).max, size=size, dtype=np.uint64, endpoint=True)


# ---------------------------------------------------------------------------
# column candidates for the HNF enumeration of subgroups


def np_valid_columns(block, hs, c):
    """Vectors ``a`` with ``0 <= a_i < hs[i]`` and ``c*a`` in the lattice of ``block``.

    ``block`` is lower triangular with diagonal ``hs``; its columns generate
    the lattice.
    """
    m = hs.shape[0]
    if m == 0:
        return np.zeros((1, 0), dtype=np.int64)
    cand = np.indices(tuple(int(h) for h in hs), dtype=np.int64).reshape(m, -1).T
    v = cand * c
    ok = np.ones(cand.shape[0], dtype=bool)
    for i in range(m):
        ok &= v[:, i] % hs[i] == 0
        q = v[:, i] // hs[i]
        v -= q[:, None] * block[:, i][None, :]
    return cand[ok]


@_njit
def nb_valid_columns(block, hs, c):
    m = hs.shape[0]
    total = 1
    for i in range(m):
        total *= hs[i]
    out = np.empty((total, m), dtype=np.int64)
    cnt = 0
    a = np.zeros(m, dtype=np.int64)
    v = np.empty(m, dtype=np.int64)
    for _ in range(total):
        for i in range(m):
            v[i] = a[i] * c
        good = True
        for i in range(m):
            h = hs[i]
            if v[i] % h != 0:
                good = False
                break
            q = v[i] // h
            if q != 0:
                for r in range(i, m):
                    v[r] -= q * block[r, i]
        if good:
            for i in range(m):
                out[cnt, i] = a[i]
            cnt += 1
        # mixed-radix increment, last coordinate fastest
        i = m - 1
        while i >= 0:
            a[i] += 1
            if a[i] < hs[i]:
                break
            a[i] = 0
            i -= 1
    return out[:cnt]


# ---------------------------------------------------------------------------
# subgroup closure and the definitional primality scan


def _np_index(coords, strides):
    return coords @ strides


def np_closure(gens, moduli, strides, coords, size):
    """Boolean mask of the subgroup generated by the columns of ``gens``."""
    k = moduli.shape[0]
    mask = np.zeros(size, dtype=bool)
    mask[0] = True
    elems = np.zeros((1, k), dtype=np.int64)
    for j in range(gens.shape[1]):
        g = gens[:, j] % moduli
        if mask[_np_index(g, strides)]:
            continue
        order = 1
        for i in range(k):
            if g[i]:
                order = np.lcm(order, moduli[i] // np.gcd(g[i], moduli[i]))
        mult = (np.arange(order, dtype=np.int64)[:, None] * g[None, :]) % moduli
        hits = mask[_np_index(mult, strides)]
        o = int(np.argmax(hits[1:])) + 1 if hits[1:].any() else order
        new = (elems[:, None, :] + mult[None, :o, :]) % moduli
        elems = new.reshape(-1, k)
        mask[_np_index(elems, strides)] = True
    return mask


def np_scan(H, moduli, strides, coords, size, rs, mult, weights):
    """For every subgroup (generators = columns of ``H[s]``) decide primality.

    Returns ``(is_prime, colon_gen, hashes, orders)``.  ``rs`` are the
    multipliers tested (ascending, ending with the exponent) and ``mult[t]``
    maps an element index to the index of ``rs[t]`` times it.  ``colon_gen``
    is the smallest multiplier in ``rs`` that maps everything into the
    subgroup.
    """
    S = H.shape[0]
    is_prime = np.zeros(S, dtype=bool)
    colon = np.zeros(S, dtype=np.int64)
    hashes = np.zeros(S, dtype=np.uint64)
    orders = np.zeros(S, dtype=np.int64)
    for s in range(S):
        mask = np_closure(H[s], moduli, strides, coords, size)
        orders[s] = mask.sum()
        hashes[s] = weights[mask].sum(dtype=np.uint64)
        prime = orders[s] < size
        colon[s] = rs[-1]
        found = False
        for t in range(rs.shape[0]):
            img = mask[mult[t]]
            kills = img.all()
            if kills and not found:
                colon[s] = rs[t]
                found = True
            if prime and not kills and (img & ~mask).any():
                prime = False
        is_prime[s] = prime
    return is_prime, colon, hashes, orders


@_njit
def _nb_closure(gens, moduli, strides, coords, size, mask, elems):
    k = moduli.shape[0]
    for e in range(size):
        mask[e] = False
    mask[0] = True
    elems[0] = 0
    cnt = 1
    tmp = np.empty(k, dtype=np.int64)
    for j in range(gens.shape[1]):
        gi = 0
        for i in range(k):
            gi += (gens[i, j] % moduli[i]) * strides[i]
        if mask[gi]:
            continue
        base = cnt
        cur = gi
        while not mask[cur]:
            for b in range(base):
                e = elems[b]
                idx = 0
                for i in range(k):
                    idx += ((coords[e, i] + coords[cur, i]) % moduli[i]) * strides[i]
                mask[idx] = True
                elems[cnt] = idx
                cnt += 1
            # cur += g
            for i in range(k):
                tmp[i] = (coords[cur, i] + gens[i, j]) % moduli[i]
            cur = 0
            for i in range(k):
                cur += tmp[i] * strides[i]
    return cnt


@_njit
def nb_closure(gens, moduli, strides, coords, size):
    mask = np.zeros(size, dtype=np.bool_)
    elems = np.zeros(size, dtype=np.int64)
    _nb_closure(gens, moduli, strides, coords, size, mask, elems)
    return mask


@_njit
def nb_scan(H, moduli, strides, coords, size, rs, mult, weights):
    S = H.shape[0]
    is_prime = np.zeros(S, dtype=np.bool_)
    colon = np.zeros(S, dtype=np.int64)
    hashes = np.zeros(S, dtype=np.uint64)
    orders = np.zeros(S, dtype=np.int64)
    mask = np.zeros(size, dtype=np.bool_)
    elems = np.zeros(size, dtype=np.int64)
    nr = rs.shape[0]
    for s in range(S):
        cnt = _nb_closure(H[s], moduli, strides, coords, size, mask, elems)
        orders[s] = cnt
        h = np.uint64(0)
        for b in range(cnt):
            h += weights[elems[b]]
        hashes[s] = h
        prime = cnt < size
        colon[s] = rs[nr - 1]
        found = False
        for t in range(nr):
            kills = True
            inj = True
            for e in range(size):
                if mask[mult[t, e]]:
                    if not mask[e]:
                        inj = False
                else:
                    kills = False
                if not kills and (not prime or not inj):
                    break
            if kills and not found:
                colon[s] = rs[t]
                found = True
            if not kills and not inj:
                prime = False
        is_prime[s] = prime
    return is_prime, colon, hashes, orders


def np_intersect(H, chosen, moduli, strides, coords, size, nmask):
    """AND of the masks of ``H[s]`` over ``s in chosen`` that contain ``nmask``."""
    acc = np.ones(size, dtype=bool)
    for s in chosen:
        mask = np_closure(H[s], moduli, strides, coords, size)
        if not (nmask & ~mask).any():
            acc &= mask
    return acc


@_njit
def nb_intersect(H, chosen, moduli, strides, coords, size, nmask):
    acc = np.ones(size, dtype=np.bool_)
    mask = np.zeros(size, dtype=np.bool_)
    elems = np.zeros(size, dtype=np.int64)
    for c in range(chosen.shape[0]):
        _nb_closure(H[chosen[c]], moduli, strides, coords, size, mask, elems)
        contains = True
        for e in range(size):
            if nmask[e] and not mask[e]:
                contains = False
                break
        if contains:
            for e in range(size):
                acc[e] = acc[e] and mask[e]
    return acc


KERNELS = {
    "numba": {
        "valid_columns": nb_valid_columns,
        "closure": nb_closure,
        "scan": nb_scan,
        "intersect": nb_intersect,
    },
    "numpy": {
        "valid_columns": np_valid_columns,
        "closure": np_closure,
        "scan": np_scan,
        "intersect": np_intersect,
    },
}


def kernel(name: str, backend: str | None = None):
    return KERNELS[backend or BACKEND][name]
