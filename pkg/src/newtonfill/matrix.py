"""Square matrices with entries in the F2 Laurent ring."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import VariableMismatchError, VerificationError
from .laurent import LaurentPoly, MonomialSubstitution, VariableList, _as_varlist, parse_poly, render, substitute


@dataclass(frozen=True)
class LaurentMatrix:
    variables: VariableList
    entries: tuple  # tuple of rows, each a tuple of LaurentPoly

    def __post_init__(self):
        variables = _as_varlist(self.variables)
        rows = tuple(tuple(row) for row in self.entries)
        d = len(rows)
        if d < 1 or any(len(r) != d for r in rows):
            raise ValueError("matrix must be square with size >= 1")
        for r in rows:
            for e in r:
                if e.variables != variables:
                    raise VariableMismatchError(
                        f"entry over {list(e.variables)}, matrix over {list(variables)}"
                    )
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "entries", rows)

    @classmethod
    def from_text(cls, rows: Sequence[Sequence[str]], variables) -> "LaurentMatrix":
        variables = _as_varlist(variables)
        return cls(variables, tuple(tuple(parse_poly(t, variables) for t in row) for row in rows))

    @classmethod
    def identity(cls, variables, size: int = 2) -> "LaurentMatrix":
        variables = _as_varlist(variables)
        zero, one = LaurentPoly.zero(variables), LaurentPoly.one(variables)
        return cls(variables, tuple(tuple(one if i == j else zero for j in range(size)) for i in range(size)))

    @classmethod
    def diag(cls, polys: Sequence[LaurentPoly]) -> "LaurentMatrix":
        variables = polys[0].variables
        zero = LaurentPoly.zero(variables)
        d = len(polys)
        return cls(variables, tuple(tuple(polys[i] if i == j else zero for j in range(d)) for i in range(d)))

    @property
    def size(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def diagonal(self) -> tuple:
        return tuple(self.entries[i][i] for i in range(self.size))

    def map(self, fn) -> "LaurentMatrix":
        rows = tuple(tuple(fn(e) for e in row) for row in self.entries)
        return LaurentMatrix(rows[0][0].variables, rows)

    def substitute(self, sigma: MonomialSubstitution) -> "LaurentMatrix":
        return self.map(lambda e: substitute(e, sigma))

    def scale(self, exps: Sequence[int]) -> "LaurentMatrix":
        """Multiply every entry by a single monomial."""
        return self.map(lambda e: e.shift(exps))

    def __matmul__(self, other):
        return mat_mul(self, other)

    def __pow__(self, n):
        return mat_pow(self, n)

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(render(e) for e in row) + "]" for row in self.entries) + "]"


def mat_mul(A: LaurentMatrix, B: LaurentMatrix) -> LaurentMatrix:
    if A.variables != B.variables:
        raise VariableMismatchError(f"{list(A.variables)} vs {list(B.variables)}")
    if A.size != B.size:
        raise ValueError(f"size mismatch: {A.size} vs {B.size}")
    d = A.size
    zero = LaurentPoly.zero(A.variables)
    rows = []
    for i in range(d):
        row = []
        for j in range(d):
            acc = zero
            for k in range(d):
                a, b = A.entries[i][k], B.entries[k][j]
                if a and b:
                    acc = acc + a * b
            row.append(acc)
        rows.append(tuple(row))
    return LaurentMatrix(A.variables, tuple(rows))


def mat_pow(A: LaurentMatrix, n: int) -> LaurentMatrix:
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"exponent must be a nonnegative integer, got {n!r}")
    result = LaurentMatrix.identity(A.variables, A.size)
    base = A
    while n:
        if n & 1:
            result = result @ base
        n >>= 1
        if n:
            base = base @ base
    return result


def conjugate(A: LaurentMatrix, U: LaurentMatrix, U_inv: LaurentMatrix) -> LaurentMatrix:
    """``U_inv @ A @ U`` after checking that ``U @ U_inv`` is the identity."""
    ident = LaurentMatrix.identity(U.variables, U.size)
    if U @ U_inv != ident:
        raise VerificationError("supplied inverse does not satisfy U @ U_inv == Id")
    return U_inv @ A @ U


@dataclass(frozen=True)
class MonomialFactorization:
    scalar: tuple
    reduced: LaurentMatrix

    def expand(self) -> LaurentMatrix:
        return self.reduced.scale(self.scalar)


def factor_monomial(A: LaurentMatrix) -> MonomialFactorization:
    """Pull a unit monomial out of ``A`` so the remainder contains a 1.

    The monomial is the smallest (lexicographic) term of the first nonzero
    entry scanned along the diagonal from the bottom-right corner, then the
    off-diagonal entries in row-major order. A matrix that already contains
    the constant 1 on its diagonal in that first entry gets the zero vector.
    """
    if A.is_zero():
        raise ValueError("cannot factor the zero matrix")
    d = A.size
    order = [(i, i) for i in reversed(range(d))]
    order += [(i, j) for i in range(d) for j in range(d) if i != j]
    for i, j in order:
        entry = A.entries[i][j]
        if entry:
            scalar = min(entry.support)
            break
    neg = tuple(-e for e in scalar)
    return MonomialFactorization(scalar, A.scale(neg))


def orbit_value(N: LaurentMatrix, M1: LaurentMatrix, n: int, row: int) -> LaurentPoly:
    """Entry ``row`` (1-based) of ``N @ M1**n @ e_1``."""
    if not 1 <= row <= N.size:
        raise IndexError(f"row {row} out of range 1..{N.size}")
    row -= 1
    P = mat_pow(M1, n)
    acc = LaurentPoly.zero(N.variables)
    for k in range(N.size):
        a, b = N.entries[row][k], P.entries[k][0]
        if a and b:
            acc = acc + a * b
    return acc


def apply_to_vector(A: LaurentMatrix, v: Sequence[LaurentPoly]) -> tuple:
    zero = LaurentPoly.zero(A.variables)
    out = []
    for i in range(A.size):
        acc = zero
        for k in range(A.size):
            if A.entries[i][k] and v[k]:
                acc = acc + A.entries[i][k] * v[k]
        out.append(acc)
    return tuple(out)
