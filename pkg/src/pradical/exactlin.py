"""Exact integer linear algebra: Hermite/Smith normal forms and lattices in Z^n.

Everything here works on Python ints, so entries never overflow. Matrices
are small in practice (a handful of rows and columns), which keeps the
classical elimination algorithms fast enough.

Conventions
-----------
Generators of a lattice are the *columns* of a matrix. The canonical form
is the column-style Hermite normal form: column ``j`` has its first nonzero
entry (the pivot) in row ``r_j`` with ``r_0 < r_1 < ...``, pivots are
positive, every entry of a pivot row lying in an earlier column is reduced
into ``[0, pivot)``, and zero columns come last.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "IntMatrix",
    "IntegerLattice",
    "SmithDecomposition",
    "hnf",
    "snf",
    "smith_decomposition",
    "kernel",
    "solve",
    "lattice_sum",
    "lattice_intersect",
    "lattice_member",
    "saturate",
]


class AmbientMismatch(ValueError):
    """Raised when two lattices (or a vector and a lattice) live in different Z^n."""


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError("matrix dimensions must be nonnegative")
        if len(self.entries) != self.rows * self.cols:
            raise ValueError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
        rows = [list(map(int, r)) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged row data")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[int]], rows: int) -> IntMatrix:
        columns = [list(map(int, c)) for c in columns]
        if any(len(c) != rows for c in columns):
            raise ValueError("column length does not match row count")
        k = len(columns)
        return cls(rows, k, tuple(columns[j][i] for i in range(rows) for j in range(k)))

    @classmethod
    def diag(cls, values: Sequence[int]) -> IntMatrix:
        n = len(values)
        return cls.from_rows([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def identity(cls, n: int) -> IntMatrix:
        return cls.diag([1] * n)

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    @cached_property
    def _column_data(self) -> tuple[tuple[int, ...], ...]:
        c = self.cols
        return tuple(self.entries[j::c] for j in range(c)) if self.rows else ((),) * c

    def columns(self) -> list[list[int]]:
        return [list(col) for col in self._column_data]

    def transpose(self) -> IntMatrix:
        return IntMatrix.from_rows(self.columns(), cols=self.rows)

    def __matmul__(self, other: IntMatrix) -> IntMatrix:
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        a, b = self.to_rows(), other.columns()
        return IntMatrix.from_rows(
            [[sum(x * y for x, y in zip(r, c)) for c in b] for r in a], cols=other.cols
        )

    def apply(self, v: Sequence[int]) -> list[int]:
        if len(v) != self.cols:
            raise ValueError("vector length does not match column count")
        return [sum(x * y for x, y in zip(r, v)) for r in self.to_rows()]

    def __repr__(self):
        return f"IntMatrix({self.to_rows()!r})"


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _hnf_columns(cols: list[list[int]], n: int, track: bool = False):
    """Column HNF in place on a list of columns. Returns (cols, rank, transform).

    ``transform`` (when tracked) is a list of columns T with ``A @ T == H``.
    """
    k = len(cols)
    T = [[int(i == j) for i in range(k)] for j in range(k)] if track else None
    piv = 0
    for i in range(n):
        if piv == k:
            break
        for j in range(piv + 1, k):
            b = cols[j][i]
            if b == 0:
                continue
            a = cols[piv][i]
            g, x, y = _xgcd(a, b)
            ag, bg = a // g, b // g
            cp, cj = cols[piv], cols[j]
            cols[piv] = [x * u + y * v for u, v in zip(cp, cj)]
            cols[j] = [ag * v - bg * u for u, v in zip(cp, cj)]
            if track:
                tp, tj = T[piv], T[j]
                T[piv] = [x * u + y * v for u, v in zip(tp, tj)]
                T[j] = [ag * v - bg * u for u, v in zip(tp, tj)]
        p = cols[piv][i]
        if p == 0:
            continue
        if p < 0:
            cols[piv] = [-u for u in cols[piv]]
            if track:
                T[piv] = [-u for u in T[piv]]
            p = -p
        for j in range(piv):
            q = cols[j][i] // p
            if q:
                cols[j] = [u - q * v for u, v in zip(cols[j], cols[piv])]
                if track:
                    T[j] = [u - q * v for u, v in zip(T[j], T[piv])]
        piv += 1
    return cols, piv, T


def hnf(m: IntMatrix) -> IntMatrix:
    """Column-style Hermite normal form of ``m`` (same shape, zero columns last)."""
    cols, _, _ = _hnf_columns(m.columns(), m.rows)
    return IntMatrix.from_columns(cols, m.rows)


def kernel(m: IntMatrix) -> IntMatrix:
    """Basis (as columns) of the integer kernel ``{x : m x = 0}``."""
    cols, rank, T = _hnf_columns(m.columns(), m.rows, track=True)
    return IntMatrix.from_columns(T[rank:], m.cols)


@dataclass(frozen=True)
class SmithDecomposition:
    """``left @ m @ right == smith``; ``left_inverse`` undoes ``left``."""

    smith: IntMatrix
    left: IntMatrix
    left_inverse: IntMatrix
    right: IntMatrix

    @property
    def invariant_factors(self) -> list[int]:
        s = self.smith
        return [s[i, i] for i in range(min(s.rows, s.cols))]


def smith_decomposition(m: IntMatrix) -> SmithDecomposition:
    n, k = m.rows, m.cols
    A = m.to_rows()
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    Ui = [[int(i == j) for j in range(n)] for i in range(n)]
    V = [[int(i == j) for j in range(k)] for i in range(k)]

    # Row op "row_i += c*row_j" on A and U is matched by "col_j -= c*col_i" on Ui.
    def add_row(i, j, c):
        A[i] = [u + c * v for u, v in zip(A[i], A[j])]
        U[i] = [u + c * v for u, v in zip(U[i], U[j])]
        for r in Ui:
            r[j] -= c * r[i]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]
        for r in Ui:
            r[i], r[j] = r[j], r[i]

    def negate_row(i):
        A[i] = [-u for u in A[i]]
        U[i] = [-u for u in U[i]]
        for r in Ui:
            r[i] = -r[i]

    def add_col(i, j, c):
        for r in A:
            r[i] += c * r[j]
        for r in V:
            r[i] += c * r[j]

    def swap_cols(i, j):
        for r in A:
            r[i], r[j] = r[j], r[i]
        for r in V:
            r[i], r[j] = r[j], r[i]

    for t in range(min(n, k)):
        while True:
            best = None
            for i in range(t, n):
                for j in range(t, k):
                    v = A[i][j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
            if best is None:
                break
            _, bi, bj = best
            if bi != t:
                swap_rows(t, bi)
            if bj != t:
                swap_cols(t, bj)
            p = A[t][t]
            dirty = False
            for i in range(t + 1, n):
                q = A[i][t] // p
                if q:
                    add_row(i, t, -q)
                if A[i][t]:
                    dirty = True
            for j in range(t + 1, k):
                q = A[t][j] // p
                if q:
                    add_col(j, t, -q)
                if A[t][j]:
                    dirty = True
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, n) for j in range(t + 1, k) if A[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if t < n and t < k and A[t][t] < 0:
            negate_row(t)

    return SmithDecomposition(
        smith=IntMatrix.from_rows(A, cols=k),
        left=IntMatrix.from_rows(U, cols=n),
        left_inverse=IntMatrix.from_rows(Ui, cols=n),
        right=IntMatrix.from_rows(V, cols=k),
    )


def snf(m: IntMatrix) -> tuple[IntMatrix, list[int]]:
    """Smith normal form and the invariant factors ``d_1 | d_2 | ...``.

    Zero factors (rank deficiency) come last.
    """
    dec = smith_decomposition(m)
    return dec.smith, dec.invariant_factors


@dataclass(frozen=True)
class IntegerLattice:
    """A sublattice of Z^n stored by its canonical HNF basis (columns)."""

    ambient_rank: int
    basis: IntMatrix

    @classmethod
    def from_generators(cls, gens: Iterable[Sequence[int]], n: int) -> IntegerLattice:
        cols = [list(map(int, g)) for g in gens]
        if any(len(c) != n for c in cols):
            raise AmbientMismatch(f"generator length differs from ambient rank {n}")
        cols, rank, _ = _hnf_columns(cols, n)
        return cls(n, IntMatrix.from_columns(cols[:rank], n))

    @classmethod
    def ambient(cls, n: int) -> IntegerLattice:
        return cls.from_generators(IntMatrix.identity(n).columns(), n)

    @classmethod
    def zero(cls, n: int) -> IntegerLattice:
        return cls(n, IntMatrix(n, 0, ()))

    @property
    def rank(self) -> int:
        return self.basis.cols

    def generators(self) -> list[list[int]]:
        return self.basis.columns()

    def scaled(self, c: int) -> IntegerLattice:
        return IntegerLattice.from_generators(
            [[c * x for x in g] for g in self.generators()], self.ambient_rank
        )

    def index(self) -> int | None:
        """``[Z^n : L]`` for full-rank lattices, ``None`` otherwise."""
        if self.rank != self.ambient_rank:
            return None
        out = 1
        for j, col in enumerate(self.generators()):
            out *= next(x for x in col if x)
        return out

    def __contains__(self, v) -> bool:
        return lattice_member(v, self)

    def __add__(self, other: IntegerLattice) -> IntegerLattice:
        return lattice_sum(self, other)

    def __and__(self, other: IntegerLattice) -> IntegerLattice:
        return lattice_intersect(self, other)

    def __le__(self, other: IntegerLattice) -> bool:
        return all(lattice_member(g, other) for g in self.generators())

    def __repr__(self):
        return f"IntegerLattice(n={self.ambient_rank}, gens={self.generators()})"


def _check_same(a: IntegerLattice, b: IntegerLattice):
    if a.ambient_rank != b.ambient_rank:
        raise AmbientMismatch(f"ambient ranks differ: {a.ambient_rank} vs {b.ambient_rank}")


def lattice_sum(a: IntegerLattice, b: IntegerLattice) -> IntegerLattice:
    _check_same(a, b)
    return IntegerLattice.from_generators(a.generators() + b.generators(), a.ambient_rank)


def lattice_intersect(a: IntegerLattice, b: IntegerLattice) -> IntegerLattice:
    _check_same(a, b)
    n, ga, gb = a.ambient_rank, a.generators(), b.generators()
    if not ga or not gb:
        return IntegerLattice.zero(n)
    stacked = IntMatrix.from_columns(ga + [[-x for x in g] for g in gb], n)
    ker = kernel(stacked)
    p = len(ga)
    out = []
    for coeffs in ker.columns():
        out.append([sum(coeffs[j] * ga[j][i] for j in range(p)) for i in range(n)])
    return IntegerLattice.from_generators(out, n)


def solve(l: IntegerLattice, v: Sequence[int]) -> list[int] | None:
    """Coefficients ``c`` with ``basis @ c == v``, or ``None`` if v is not in l."""
    n = l.ambient_rank
    if len(v) != n:
        raise AmbientMismatch(f"vector of length {len(v)} in Z^{n}")
    v = [int(x) for x in v]
    coeffs = []
    cols = l.generators()
    j = 0
    for i in range(n):
        if j < len(cols) and cols[j][i] != 0:
            p = cols[j][i]
            if v[i] % p:
                return None
            q = v[i] // p
            coeffs.append(q)
            if q:
                v = [x - q * y for x, y in zip(v, cols[j])]
            j += 1
        elif v[i] != 0:
            return None
    return coeffs


def lattice_member(v: Sequence[int], l: IntegerLattice) -> bool:
    return solve(l, v) is not None


def saturate(l: IntegerLattice) -> IntegerLattice:
    """``(Q L) ∩ Z^n``: the smallest lattice containing ``l`` with torsion-free cokernel."""
    n = l.ambient_rank
    if l.rank == 0:
        return l
    if l.rank == n:
        return IntegerLattice.ambient(n)
    dec = smith_decomposition(l.basis)
    inv = dec.left_inverse.columns()
    return IntegerLattice.from_generators(inv[: l.rank], n)
