"""Exact integer linear algebra: determinants, Hermite and Smith forms, LLL.

Everything works on Python ints, so intermediates never overflow.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd
from typing import Iterable, Sequence


@dataclass(frozen=True)
class IntMatrix:
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if rows and len({len(r) for r in rows}) != 1:
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, rows: Iterable[Sequence[int]]) -> "IntMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, m: int, n: int) -> "IntMatrix":
        return cls(tuple((0,) * n for _ in range(m)))

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    @property
    def T(self) -> "IntMatrix":
        return IntMatrix(tuple(zip(*self.rows))) if self.rows else self

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            cols = list(zip(*other.rows))
            return IntMatrix(tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.rows))
        vec = tuple(other)
        if len(vec) != self.ncols:
            raise ValueError(f"shape mismatch {self.shape} @ vector of length {len(vec)}")
        return tuple(sum(a * b for a, b in zip(r, vec)) for r in self.rows)

    def tolist(self):
        return [list(r) for r in self.rows]

    def __str__(self):
        return "\n".join(" ".join(f"{x:>3d}" for x in r) for r in self.rows)


def _as_rows(M):
    if isinstance(M, IntMatrix):
        return [list(r) for r in M.rows]
    return [list(map(int, r)) for r in M]


def det_bareiss(M) -> int:
    """Determinant by fraction-free Gaussian elimination."""
    A = _as_rows(M)
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for i in range(k + 1, n):
                if A[i][k] != 0:
                    A[k], A[i] = A[i], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def hnf(M):
    """Row Hermite normal form.

    Returns ``(H, U)`` with ``H == U @ M``, ``U`` unimodular, ``H`` in row
    echelon form with positive pivots and entries above each pivot reduced
    into ``[0, pivot)``. Zero rows sit at the bottom.
    """
    A = _as_rows(M)
    m = len(A)
    n = len(A[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    r = 0
    for c in range(n):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if A[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(A[i][c]))
            A[r], A[p] = A[p], A[r]
            U[r], U[p] = U[p], U[r]
            done = True
            for i in range(r + 1, m):
                if A[i][c]:
                    q = A[i][c] // A[r][c]
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
                    if A[i][c]:
                        done = False
            if done:
                break
        if A[r][c] == 0:
            continue
        if A[r][c] < 0:
            A[r] = [-a for a in A[r]]
            U[r] = [-a for a in U[r]]
        for i in range(r):
            q = A[i][c] // A[r][c]
            if q:
                A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                U[i] = [a - q * b for a, b in zip(U[i], U[r])]
        r += 1
    return IntMatrix.of(A), IntMatrix.of(U)


def rank(M) -> int:
    H, _ = hnf(M)
    return sum(1 for r in H.rows if any(r))


def _snf(M):
    A = _as_rows(M)
    m = len(A)
    n = len(A[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]
    Vinv = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]
        Vinv[i], Vinv[j] = Vinv[j], Vinv[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        A[dst] = [a - q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for row in A:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]
        Vinv[src] = [a + q * b for a, b in zip(Vinv[src], Vinv[dst])]

    t = 0
    while t < min(m, n):
        cand = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not cand:
            break
        _, i0, j0 = min(cand)
        swap_rows(t, i0)
        swap_cols(t, j0)
        while True:
            clean = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, A[i][t] // A[t][t])
                    if A[i][t]:
                        clean = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, A[t][j] // A[t][t])
                    if A[t][j]:
                        clean = False
            if not clean:
                cand = [(abs(A[i][t]), i, t) for i in range(t, m) if A[i][t]]
                cand += [(abs(A[t][j]), t, j) for j in range(t, n) if A[t][j]]
                _, i0, j0 = min(cand)
                swap_rows(t, i0)
                swap_cols(t, j0)
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % A[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, -1)
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    return A, U, V, Vinv


def snf(M):
    """Smith normal form ``(D, U, V)`` with ``D == U @ M @ V``."""
    A, U, V, _ = _snf(M)
    return IntMatrix.of(A), IntMatrix.of(U), IntMatrix.of(V)


def saturated_row_basis(M):
    """Basis of ``span_Q(rows of M) ∩ Z^n`` plus dual coordinate functionals.

    Returns ``(B, W)`` where ``B`` is ``r x n`` (one basis vector per row)
    and ``W`` is ``n x r`` with ``B @ W == Id_r``; any lattice vector ``v``
    of the saturated lattice satisfies ``v == (v @ W) @ B``.
    """
    A, _, V, Vinv = _snf(M)
    r = sum(1 for i in range(min(len(A), len(A[0]) if A else 0)) if A[i][i])
    B = [Vinv[i] for i in range(r)]
    W = [row[:r] for row in V]
    return B, W


def _round(x: Fraction) -> int:
    return floor(x + Fraction(1, 2))


def lll_gram(G, delta=Fraction(3, 4)):
    """LLL reduction driven by a positive definite Gram matrix.

    Returns ``(T, Tinv)``, unimodular, such that the basis ``b @ T`` is
    LLL reduced when ``G`` is the Gram matrix of ``b``.
    """
    r = len(G)
    T = [[int(i == j) for j in range(r)] for i in range(r)]
    Tinv = [[int(i == j) for j in range(r)] for i in range(r)]
    if r <= 1:
        return T, Tinv
    Gc = [[int(x) for x in row] for row in G]  # Gram matrix of the current basis

    def gso():
        mu = [[Fraction(0)] * r for _ in range(r)]
        B = [Fraction(0)] * r
        for i in range(r):
            for j in range(i):
                s = Gc[i][j] - sum(mu[j][l] * mu[i][l] * B[l] for l in range(j))
                mu[i][j] = s / B[j]
            B[i] = Gc[i][i] - sum(mu[i][l] ** 2 * B[l] for l in range(i))
        return mu, B

    def col_sub(k, j, q):  # b_k -= q b_j
        for row in T:
            row[k] -= q * row[j]
        Tinv[j] = [a + q * b for a, b in zip(Tinv[j], Tinv[k])]
        gkk = Gc[k][k] - 2 * q * Gc[k][j] + q * q * Gc[j][j]
        for l in range(r):
            Gc[k][l] -= q * Gc[j][l]
        for l in range(r):
            Gc[l][k] = Gc[k][l]
        Gc[k][k] = gkk

    def col_swap(i, j):
        for row in T:
            row[i], row[j] = row[j], row[i]
        Tinv[i], Tinv[j] = Tinv[j], Tinv[i]
        Gc[i], Gc[j] = Gc[j], Gc[i]
        for row in Gc:
            row[i], row[j] = row[j], row[i]

    k = 1
    while k < r:
        mu, B = gso()
        for j in range(k - 1, -1, -1):
            q = _round(mu[k][j])
            if q:
                col_sub(k, j, q)
                for l in range(j):
                    mu[k][l] -= q * mu[j][l]
                mu[k][j] -= q
        if B[k] >= (delta - mu[k][k - 1] ** 2) * B[k - 1]:
            k += 1
        else:
            col_swap(k, k - 1)
            k = max(k - 1, 1)
    return T, Tinv


def primitive(vec):
    g = 0
    for x in vec:
        g = gcd(g, x)
    if g <= 1:
        return tuple(vec)
    return tuple(x // g for x in vec)
