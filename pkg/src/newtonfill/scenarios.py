"""Augmentation orbits of the two aug-infinite links and the (2, n) torus knots.

Each scenario is entered as raw data (chord values before the filling's
relations are imposed, the monodromy matrix, the change-of-basis matrix N
and its inverse, and the factored step matrix in x, y, z coordinates).
Every derived quantity is recomputed from the raw data at construction and
compared with the transcribed form, so a transcription slip fails loudly.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import VerificationError
from .intlinalg import IntMatrix, det_bareiss
from .laurent import LaurentPoly, MonomialSubstitution, VariableList, parse_poly, substitute
from .matrix import LaurentMatrix, conjugate, factor_monomial, mat_pow
from .polytope import Fingerprint, fingerprint, is_simplex_unimodular_standard, newton_polytope

XYZ = VariableList(["x", "y", "z"])

# Monomial counts of the upper-left entry of [[x+y, 1], [x, 1]]^n, n = 1..40.
ALPHA_MONOMIAL_COUNTS = (
    2, 3, 5, 6, 7, 9, 14, 15, 13, 14, 19, 21, 22, 27, 41, 42, 31, 29, 34, 35,
    33, 38, 55, 57, 46, 47, 61, 66, 67, 81, 122, 123, 85, 74, 79, 77, 66, 71, 97, 98,
)


def alpha_matrix(variables=("x", "y")) -> LaurentMatrix:
    x, y = variables
    return LaurentMatrix.from_text([[f"{x} + {y}", "1"], [x, "1"]], variables)


def alpha_poly(n: int, variables=("x", "y")) -> LaurentPoly:
    return mat_pow(alpha_matrix(variables), n)[0, 0]


def alpha_sequence(n_max: int = 40) -> list:
    """Monomial counts of the upper-left entry of the alpha matrix power."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    A = alpha_matrix()
    P = A
    counts = [len(P[0, 0])]
    for _ in range(n_max - 1):
        P = P @ A
        counts.append(len(P[0, 0]))
    return counts


def alpha_fingerprint_formula(n: int) -> tuple:
    """(dim, total, boundary, interior, nvol) of the triangle (1,0), (n,0), (0,n), n >= 2."""
    return (2, (n * n + n) // 2 + 1, 2 * n, (n * n - 3 * n) // 2 + 1, n * n - n)


def orbit_fingerprint_formula(n: int) -> tuple:
    """(dim, total, boundary, interior, nvol) of the triangle (1,0), (n,0), (0,2n), n >= 2."""
    return (2, n * n + 1, 2 * n, (n - 1) ** 2, 2 * n * (n - 1))


@dataclass(frozen=True, eq=False)
class Scenario:
    """One filling plus theta-loop monodromy acting on a pair of chords.

    ``chords`` names the two tracked chords in the order of the column
    vector the monodromy acts on; ``target_row`` (1-based) selects the
    chord whose augmented value is fingerprinted.
    """

    name: str
    variables: VariableList
    raw_variables: VariableList
    relations: MonomialSubstitution
    raw_values: dict
    values: dict
    chords: tuple
    monodromy: LaurentMatrix
    base_N: LaurentMatrix
    base_N_inv: LaurentMatrix
    step_M1: LaurentMatrix
    scalar: tuple
    reduced_xyz: LaurentMatrix
    xyz: MonomialSubstitution
    target_row: int = 2
    expected_total: Callable[[int], Optional[int]] = field(default=lambda n: n * n + 1)

    def base_vector(self) -> tuple:
        return tuple(self.values[c] for c in self.chords)

    def orbit_vector(self, n: int) -> tuple:
        """Augmented values of both chords after ``n`` loop traversals."""
        P = mat_pow(self.step_M1, n)
        N = self.base_N
        return tuple(N[r, 0] * P[0, 0] + N[r, 1] * P[1, 0] for r in range(2))

    def orbit_value(self, n: int) -> LaurentPoly:
        return self.orbit_vector(n)[self.target_row - 1]

    def hull_poly(self, n: int) -> LaurentPoly:
        """Upper-left entry of ``reduced_xyz**n`` (beta^n or gamma^n)."""
        return mat_pow(self.reduced_xyz, n)[0, 0]

    def aliased(self, name: str) -> "Scenario":
        return Scenario(**{**self.__dict__, "name": name})


def _build(
    name,
    raw_variables,
    raw_values,
    relations,
    variables,
    displayed_values,
    monodromy,
    chords,
    N,
    N_inv,
    reduced_xyz,
    xyz_images,
    displayed_M1=None,
):
    raw_variables = VariableList(raw_variables)
    variables = VariableList(variables)
    sigma = MonomialSubstitution.from_mapping(raw_variables, variables, relations)
    raw = {c: parse_poly(t, raw_variables) for c, t in raw_values.items()}
    values = {c: substitute(p, sigma) for c, p in raw.items()}
    for c, text in displayed_values.items():
        if values[c] != parse_poly(text, variables):
            raise VerificationError(f"{name}: relations do not reproduce the value of {c}")
    M = LaurentMatrix(variables, tuple(tuple(values[e] if e in values else parse_poly(e, variables) for e in row) for row in monodromy))
    N = LaurentMatrix.from_text(N, variables)
    N_inv = LaurentMatrix.from_text(N_inv, variables)
    for r, c in enumerate(chords):
        if N[r, 0] != values[c]:
            raise VerificationError(f"{name}: first column of N is not the base value of {c}")
    M1 = conjugate(M, N, N_inv)
    if displayed_M1 is not None and M1 != LaurentMatrix.from_text(displayed_M1, variables):
        raise VerificationError(f"{name}: N^-1 M N differs from the transcribed step matrix")
    xyz = MonomialSubstitution.from_mapping(XYZ, variables, xyz_images)
    reduced = LaurentMatrix.from_text(reduced_xyz, XYZ)
    fac = factor_monomial(M1)
    if fac.scalar != xyz.image_of((0, 0, 1)):
        raise VerificationError(f"{name}: factored scalar is not z")
    if fac.reduced != reduced.substitute(xyz):
        raise VerificationError(f"{name}: factored step matrix differs from its x, y, z form")
    return Scenario(
        name=name,
        variables=variables,
        raw_variables=raw_variables,
        relations=sigma,
        raw_values=raw,
        values=values,
        chords=tuple(chords),
        monodromy=M,
        base_N=N,
        base_N_inv=N_inv,
        step_M1=M1,
        scalar=fac.scalar,
        reduced_xyz=reduced,
        xyz=xyz,
    )


def scenario_beta11() -> Scenario:
    """Lambda(beta_11): filling by pinching a9, a10, a11, a12, a13, a16."""
    return _build(
        "beta11",
        raw_variables=["s9", "s10", "s11", "s12", "s13", "s16"],
        raw_values={
            "a9": "s9",
            "a11": "s11",
            "a19": "s9*s13*s12^2*s10^-1*s11^-2*s16^-1 + s13*s12*s11^-1*s16^-1 + s9*s11^-1",
        },
        # s10 = s11 = s16^-1 = s13*s12*s9
        relations={"s10": "s11", "s16": "s11^-1", "s13": "s11*s12^-1*s9^-1"},
        variables=["s9", "s11", "s12", "s13"],
        displayed_values={"a19": "s12*s11^-1 + s11*s9^-1 + s11^-1*s9"},
        monodromy=[["0", "1"], ["1", "a19"]],
        chords=("a11", "a9"),
        N=[["s11", "1"], ["s9", "0"]],
        N_inv=[["0", "s9^-1"], ["1", "s11*s9^-1"]],
        reduced_xyz=[["x*y^-1 + z^-2", "y^-1"], ["x", "1"]],
        xyz_images={"x": "s12*s9*s11^-1", "y": "s11", "z": "s9^-1*s11"},
    )


def scenario_lambda1() -> Scenario:
    """Lambda_1: filling by pinching a9, a13, a10, a12, a4, a1."""
    return _build(
        "lambda1",
        raw_variables=["s1", "s4", "s9", "s10", "s11", "s12", "s13"],
        raw_values={
            "a9": "s9",
            "a10": "s10 + s10^2*s11^2*s13*s1^-1*s4^-1*s12^-1",
            "a13": "s10*s9^-1 + s13 + s10^2*s11^2*s13*s1^-1*s4^-1*s9^-1*s12^-1",
        },
        # s10*s11*s13 = 1 and s1*s4*s9*s12 = 1
        relations={"s11": "s10^-1*s13^-1", "s1": "s4^-1*s9^-1*s12^-1"},
        variables=["s4", "s9", "s10", "s12", "s13"],
        displayed_values={"a10": "s10 + s9*s13^-1", "a13": "s10*s9^-1 + s13 + s13^-1"},
        monodromy=[["a13", "1"], ["1", "0"]],
        chords=("a10", "a9"),
        N=[["s10 + s9*s13^-1", "1"], ["s9", "0"]],
        N_inv=[["0", "s9^-1"], ["1", "s13^-1 + s10*s9^-1"]],
        displayed_M1=[["s13^-1 + s10*s9^-1", "s9^-1"], ["s10*s13", "s13"]],
        reduced_xyz=[["z^-2 + y*x^-1*z^-1", "x^-1*z^-1"], ["y", "1"]],
        xyz_images={"x": "s9", "y": "s10", "z": "s13"},
    )


SCENARIOS = {
    "beta11": scenario_beta11,
    "lambda1": scenario_lambda1,
    # Over F2 the non-orientable fillings give the same computation.
    "beta11-nonorientable": lambda: scenario_beta11().aliased("beta11-nonorientable"),
    "lambda1-nonorientable": lambda: scenario_lambda1().aliased("lambda1-nonorientable"),
}


def get_scenario(name: str) -> Scenario:
    try:
        return SCENARIOS[name]()
    except KeyError:
        raise KeyError(f"unknown scenario {name!r}; choose from {', '.join(SCENARIOS)}") from None


@dataclass(frozen=True)
class OrbitRow:
    n: int
    monomials: int
    fingerprint: Fingerprint
    value: Optional[LaurentPoly] = field(default=None, compare=False, repr=False)

    def to_dict(self) -> dict:
        return {"n": self.n, "monomials": self.monomials, "fingerprint": self.fingerprint.to_dict()}


def orbit_table(s: Scenario, n_max: int, check: bool = True) -> list:
    """Fingerprint the tracked chord for n = 1..n_max.

    With ``check`` a total lattice point count that disagrees with the
    scenario's closed form raises ``VerificationError``.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    rows = []
    P = LaurentMatrix.identity(s.variables, 2)
    N = s.base_N
    r = s.target_row - 1
    for n in range(1, n_max + 1):
        P = P @ s.step_M1
        value = N[r, 0] * P[0, 0] + N[r, 1] * P[1, 0]
        fp = fingerprint(value)
        expected = s.expected_total(n) if s.expected_total else None
        if check and expected is not None and fp.total != expected:
            raise VerificationError(
                f"{s.name}: n={n} has {fp.total} lattice points, expected {expected}"
            )
        rows.append(OrbitRow(n, len(value), fp, value))
    return rows


def distinctness_verdict(rows) -> tuple:
    """``(True, None)`` if all fingerprints differ, else ``(False, (n_i, n_j))``."""
    if not rows:
        raise ValueError("no rows")
    seen = {}
    for row in rows:
        key = row.fingerprint.invariants()
        if key in seen:
            return False, (seen[key], row.n)
        seen[key] = row.n
    return True, None


def orbit_report(s: Scenario, rows) -> dict:
    distinct, witness = distinctness_verdict(rows)
    return {
        "scenario": s.name,
        "rows": [row.to_dict() for row in rows],
        "distinct": distinct,
        "witness": list(witness) if witness else None,
    }


# -- (2, n) torus knots -----------------------------------------------------

@dataclass(frozen=True)
class TorusInstance:
    n: int
    i: int
    value: LaurentPoly
    S: IntMatrix
    S_inv: IntMatrix

    @property
    def det(self) -> int:
        return det_bareiss(self.S)


def torus_raw_value(n: int, i: int) -> LaurentPoly:
    """Augmented value of the i-th crossing before eliminating s_i."""
    variables = VariableList([f"s{j}" for j in range(1, n + 1)])
    terms = []
    e = [0] * n
    e[i - 1] = 1
    terms.append(e)
    for j in range(1, i):
        e = [0] * n
        e[j - 1] = -1
        for k in range(j + 1, i):
            e[k - 1] = -2
        terms.append(e)
    for j in range(i + 1, n + 1):
        e = [0] * n
        e[j - 1] = -1
        for k in range(i + 1, j):
            e[k - 1] = -2
        terms.append(e)
    return LaurentPoly.from_terms(variables, terms)


def _sign_matrix_D(m):
    return [[0 if r == c else (1 if c > r else -1) for c in range(m)] for r in range(m)]


def _inverse_D(m):
    # zero diagonal; right of it -1, +1, ...; below it +1, -1, ...
    out = [[0] * m for _ in range(m)]
    for r in range(m):
        for c in range(m):
            if c > r:
                out[r][c] = -1 if (c - r) % 2 else 1
            elif c < r:
                out[r][c] = 1 if (r - c) % 2 else -1
    return out


def _inverse_O(rows, cols):
    # odd rows (1-based) start with +1, even rows with -1, alternating along the row
    return [[(-1) ** (r + c) for c in range(cols)] for r in range(rows)]


def _blocks(tl, tr, bl, br, a, b):
    top = [tl[r] + tr[r] for r in range(a)]
    bottom = [bl[r] + br[r] for r in range(b)]
    return IntMatrix.of(top + bottom)


def torus_block_matrix(n: int, i: int) -> IntMatrix:
    a, b = i - 1, n - i
    ones = lambda r, c: [[1] * c for _ in range(r)]
    return _blocks(_sign_matrix_D(a), ones(a, b), ones(b, a), _sign_matrix_D(b), a, b)


def torus_block_inverse(n: int, i: int) -> IntMatrix:
    a, b = i - 1, n - i
    return _blocks(_inverse_D(a), _inverse_O(a, b), _inverse_O(b, a), _inverse_D(b), a, b)


def torus_value(n: int, i: int) -> TorusInstance:
    """Eliminate s_i, translate the Newton polytope and assemble S and S^-1.

    ``S`` has the translated non-corner support points as rows. Rows and
    columns for the crossings left of ``i`` are listed right-to-left
    (s_{i-1}, ..., s_1) so that ``S`` takes the block form built from the
    +-1 sign matrices; this is a permutation, so ``|det S|`` is unchanged.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"n must be odd and >= 3, got {n}")
    if not 1 <= i <= n:
        raise ValueError(f"crossing index {i} out of range 1..{n}")
    raw = torus_raw_value(n, i)
    keep = [f"s{j}" for j in range(1, n + 1) if j != i]
    target = VariableList(keep)
    sigma = MonomialSubstitution.from_mapping(
        raw.variables, target, {f"s{i}": "*".join(f"{v}^-1" for v in keep)}
    )
    value = substitute(raw, sigma)
    if len(value) != n:
        raise VerificationError(f"value has {len(value)} monomials, expected {n}")
    shifted = {tuple(e + 1 for e in a) for a in value.support}
    origin = (0,) * (n - 1)
    if origin not in shifted:
        raise VerificationError("the s_i monomial did not translate to the origin")

    # position of s_j among the kept coordinates
    pos = {j: (j - 1 if j < i else j - 2) for j in range(1, n + 1) if j != i}
    col_order = [pos[j] for j in range(i - 1, 0, -1)] + [pos[j] for j in range(i + 1, n + 1)]

    def point_for(j):
        # the translated monomial coming from pinching crossing j
        e = [1] * (n - 1)
        if j < i:
            e[pos[j]] = 0
            for k in range(j + 1, i):
                e[pos[k]] = -1
        else:
            e[pos[j]] = 0
            for k in range(i + 1, j):
                e[pos[k]] = -1
        return tuple(e)

    row_chords = list(range(i - 1, 0, -1)) + list(range(i + 1, n + 1))
    rows = []
    for j in row_chords:
        p = point_for(j)
        if p not in shifted:
            raise VerificationError(f"support point for crossing {j} missing")
        rows.append([p[c] for c in col_order])
    S = IntMatrix.of(rows)
    if S != torus_block_matrix(n, i):
        raise VerificationError("translated points do not match the block form of S")
    S_inv = torus_block_inverse(n, i)
    if S @ S_inv != IntMatrix.identity(n - 1):
        raise VerificationError("S @ S_inv != Id")
    return TorusInstance(n, i, value, S, S_inv)


def torus_simplex_check(t: TorusInstance) -> bool:
    P = newton_polytope(t.value)
    return P.intrinsic_dim == t.n - 1 and P.is_simplex and is_simplex_unimodular_standard(P)
