"""Newton polytopes and their unimodular-invariant lattice data.

Pipeline: support points -> affine lattice reduction (intrinsic coordinates)
-> exact convex hull with integer facet inequalities -> lattice point
count by sweeping lines through the reduced polytope.

Dimension policy: intrinsic dimension <= 3 is fully supported; dimension
>= 4 only for simplices.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Optional, Sequence

from .errors import DimensionPolicyError, NotUnimodularError, ZeroPolynomialError
from .intlinalg import IntMatrix, det_bareiss, lll_gram, primitive, saturated_row_basis
from .laurent import LaurentPoly, VariableList

# Sweep lines enumerated before giving up on a high-dimensional simplex.
MAX_SWEEP_LINES = 5_000_000


@dataclass(frozen=True)
class LatticeReduction:
    """Affine lattice chart ``p = base + c @ basis`` for points of the hull.

    ``basis`` rows span ``(aff - base) ∩ Z^k``; ``coords`` maps back:
    ``c = (p - base) @ coords``.
    """

    dim: int
    base: tuple
    basis: IntMatrix
    coords: IntMatrix
    points: tuple

    def project(self, p: Sequence[int]) -> tuple:
        diff = [a - b for a, b in zip(p, self.base)]
        return tuple(sum(diff[i] * self.coords.rows[i][j] for i in range(len(diff))) for j in range(self.dim))

    def lift(self, c: Sequence[int]) -> tuple:
        k = len(self.base)
        return tuple(self.base[i] + sum(c[j] * self.basis.rows[j][i] for j in range(self.dim)) for i in range(k))


def lattice_reduce(points: Iterable[Sequence[int]]) -> LatticeReduction:
    """Express points in a basis of the lattice of their affine hull.

    The base point is the lexicographically smallest point. The basis is
    taken from the Smith form of the difference vectors (which saturates
    the lattice they span) and then LLL-reduced against the point cloud, so
    reduced coordinates stay small even after large unimodular shears.
    Lattice points of ``Z^k`` inside the hull correspond one-to-one with
    points of ``Z^d`` inside the reduced hull.
    """
    pts = sorted(set(tuple(int(x) for x in p) for p in points))
    if not pts:
        raise ValueError("cannot reduce an empty point set")
    k = len(pts[0])
    base = pts[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in pts[1:]]
    if not diffs or not any(any(d) for d in diffs):
        return LatticeReduction(0, base, IntMatrix(()), IntMatrix(tuple(() for _ in range(k))), ((),))
    B, W = saturated_row_basis(diffs)
    d = len(B)
    X = [[sum(row[i] * W[i][j] for i in range(k)) for j in range(d)] for row in diffs]
    # width reduction
    G = [[sum(x[a] * x[b] for x in X) for b in range(d)] for a in range(d)]
    T, Tinv = lll_gram(G)
    W = [[sum(W[i][a] * T[a][j] for a in range(d)) for j in range(d)] for i in range(k)]
    B = [[sum(Tinv[i][a] * B[a][j] for a in range(d)) for j in range(k)] for i in range(d)]
    X = [[sum(row[i] * W[i][j] for i in range(k)) for j in range(d)] for row in diffs]
    # put the widest coordinate last (the sweep solves it analytically)
    extent = [max(max(x[j] for x in X), 0) - min(min(x[j] for x in X), 0) for j in range(d)]
    order = sorted(range(d), key=lambda j: (extent[j], j))
    W = [[row[j] for j in order] for row in W]
    B = [B[j] for j in order]
    if d == 1:
        # orient so the other points have positive coordinate
        if sum(diffs[-1][i] * W[i][0] for i in range(k)) < 0:
            W = [[-row[0]] for row in W]
            B = [[-x for x in B[0]]]
    red = LatticeReduction(d, base, IntMatrix.of(B), IntMatrix.of(W), ())
    reduced = tuple(red.project(p) for p in pts)
    return LatticeReduction(d, base, IntMatrix.of(B), IntMatrix.of(W), reduced)


# -- exact hulls in reduced coordinates -------------------------------------

def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _cross2(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _cross3(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _orient3(a, b, c, d):
    return _dot(_cross3(_sub(b, a), _sub(c, a)), _sub(d, a))


def _hull_1d(pts):
    lo, hi = min(p[0] for p in pts), max(p[0] for p in pts)
    facets = (((-1,), -lo), ((1,), hi))
    return [(lo,), (hi,)], facets, hi - lo


def _hull_2d(pts):
    pts = sorted(set(pts))
    lower, upper = [], []
    for p in pts:
        while len(lower) >= 2 and _cross2(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    for p in reversed(pts):
        while len(upper) >= 2 and _cross2(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    ring = lower[:-1] + upper[:-1]  # counter-clockwise
    facets = []
    twice_area = 0
    for a, b in zip(ring, ring[1:] + ring[:1]):
        normal = primitive((b[1] - a[1], a[0] - b[0]))
        facets.append((normal, _dot(normal, a)))
        twice_area += a[0] * b[1] - a[1] * b[0]
    return ring, tuple(facets), abs(twice_area)


def _hull_3d(pts):
    pts = sorted(set(pts))
    a = pts[0]
    b = next(p for p in pts if p != a)
    c = next(p for p in pts if any(_cross3(_sub(b, a), _sub(p, a))))
    d = next(p for p in pts if _orient3(a, b, c, p) != 0)
    simplex = (a, b, c, d)
    faces = []
    for omit in range(4):
        tri = [simplex[i] for i in range(4) if i != omit]
        if _orient3(*tri, simplex[omit]) > 0:
            tri[1], tri[2] = tri[2], tri[1]
        faces.append(tuple(tri))
    used = set(simplex)
    for p in pts:
        if p in used:
            continue
        visible = [f for f in faces if _orient3(*f, p) > 0]
        if not visible:
            continue
        edges = set()
        for u, v, w in visible:
            edges.update(((u, v), (v, w), (w, u)))
        horizon = [(u, v) for (u, v) in edges if (v, u) not in edges]
        vis = set(visible)
        faces = [f for f in faces if f not in vis] + [(u, v, p) for (u, v) in horizon]
        used.add(p)
    facets = {}
    six_vol = 0
    for u, v, w in faces:
        n = _cross3(_sub(v, u), _sub(w, u))
        six_vol += _dot(n, _sub(u, a))
        if any(n):
            n = primitive(n)
            facets[n] = _dot(n, u)
    facets = tuple(sorted(facets.items()))
    candidates = {q for f in faces for q in f}
    vertices = []
    for q in sorted(candidates):
        tight = [n for n, c in facets if _dot(n, q) == c]
        if any(det_bareiss(trip) != 0 for trip in itertools.combinations(tight, 3)):
            vertices.append(q)
    return vertices, facets, abs(six_vol)


def _simplex_facets(verts):
    d = len(verts) - 1
    facets = []
    for omit in range(d + 1):
        others = [v for i, v in enumerate(verts) if i != omit]
        ref = others[0]
        rows = [_sub(v, ref) for v in others[1:]]
        normal = []
        for col in range(d):
            minor = [[r[j] for j in range(d) if j != col] for r in rows]
            normal.append((-1) ** col * det_bareiss(minor))
        normal = primitive(tuple(normal))
        if _dot(normal, verts[omit]) > _dot(normal, ref):
            normal = tuple(-x for x in normal)
        facets.append((normal, _dot(normal, ref)))
    return tuple(facets)


def _find_simplex(pts, d):
    """Vertices of ``conv(pts)`` if it is a d-simplex, else None."""
    if len(pts) == d + 1:
        return list(pts)
    directions = []
    for i in range(d):
        e = [0] * d
        e[i] = 1
        directions += [tuple(e), tuple(-x for x in e)]
    directions += [(1,) * d, (-1,) * d]
    cands = sorted({max(pts, key=lambda p: (_dot(u, p), p)) for u in directions})
    if len(cands) != d + 1:
        return None
    if det_bareiss([_sub(v, cands[0]) for v in cands[1:]]) == 0:
        return None
    facets = _simplex_facets(cands)
    if all(_dot(n, p) <= c for p in pts for n, c in facets):
        return cands
    return None


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of a finite point set in ``Z^k``.

    ``vertices`` are ambient extreme points, sorted. ``facets`` are pairs
    ``(normal, offset)`` meaning ``normal . x <= offset`` in reduced
    coordinates; each normal is primitive.
    """

    ambient_dim: int
    vertices: tuple
    intrinsic_dim: int
    reduction: LatticeReduction
    reduced_vertices: tuple
    facets: tuple
    normalized_volume: Optional[int]

    @property
    def is_simplex(self) -> bool:
        return len(self.vertices) == self.intrinsic_dim + 1


def polytope_from_points(points: Iterable[Sequence[int]]) -> LatticePolytope:
    pts = sorted(set(tuple(p) for p in points))
    if not pts:
        raise ValueError("empty point set has no polytope")
    k = len(pts[0])
    red = lattice_reduce(pts)
    d = red.dim
    rpts = list(red.points)
    if d == 0:
        verts, facets, nvol = [()], (), 0
    elif d == 1:
        verts, facets, nvol = _hull_1d(rpts)
    elif d == 2:
        verts, facets, nvol = _hull_2d(rpts)
    elif d == 3:
        verts, facets, nvol = _hull_3d(rpts)
    else:
        verts = _find_simplex(rpts, d)
        if verts is None:
            raise DimensionPolicyError(
                f"intrinsic dimension {d} is only supported for simplices"
            )
        facets = _simplex_facets(verts)
        nvol = abs(det_bareiss([_sub(v, verts[0]) for v in verts[1:]]))
    ambient = tuple(sorted(red.lift(v) for v in verts))
    return LatticePolytope(
        ambient_dim=k,
        vertices=ambient,
        intrinsic_dim=d,
        reduction=red,
        reduced_vertices=tuple(sorted(verts)),
        facets=tuple(facets),
        normalized_volume=nvol,
    )


def newton_polytope(p: LaurentPoly) -> LatticePolytope:
    if p.is_zero():
        raise ZeroPolynomialError("the zero polynomial has no Newton polytope")
    return polytope_from_points(p.support)


def _floor_div(a, b):
    return a // b


def _ceil_div(a, b):
    return -((-a) // b)


def count_lattice_points(P: LatticePolytope):
    """``(total, boundary, interior)`` lattice point counts.

    Sweeps lines parallel to the last reduced axis; on each line the facet
    inequalities give an exact integer interval. Boundary means tight on at
    least one facet (relative boundary). Conventions: a point counts as one
    boundary point; a segment's boundary is its two endpoints.
    """
    d = P.intrinsic_dim
    if d == 0:
        return 1, 1, 0
    verts = P.reduced_vertices
    facets = P.facets
    ranges = [range(min(v[j] for v in verts), max(v[j] for v in verts) + 1) for j in range(d - 1)]
    lines = 1
    for r in ranges:
        lines *= len(r)
    if lines > MAX_SWEEP_LINES:
        raise DimensionPolicyError(f"sweep would visit {lines} lines; polytope too large to enumerate")
    total = boundary = 0
    for prefix in itertools.product(*ranges):
        lo = hi = None
        flat = False
        empty = False
        bounds = []
        for normal, offset in facets:
            a = normal[-1]
            rest = offset - sum(x * y for x, y in zip(normal[:-1], prefix))
            if a > 0:
                ub = _floor_div(rest, a)
                hi = ub if hi is None else min(hi, ub)
                bounds.append((a, rest))
            elif a < 0:
                lb = _ceil_div(rest, a)
                lo = lb if lo is None else max(lo, lb)
                bounds.append((a, rest))
            elif rest < 0:
                empty = True
                break
            elif rest == 0:
                flat = True
        if empty or lo is None or hi is None or lo > hi:
            continue
        n = hi - lo + 1
        total += n
        if flat:
            boundary += n
            continue
        ends = {lo, hi}
        boundary += sum(1 for x in ends if any(a * x == rest for a, rest in bounds))
    return total, boundary, total - boundary


@dataclass(frozen=True)
class Fingerprint:
    """Unimodular-invariant summary of a lattice polytope.

    Equality ignores ``vertices``, which are carried only for reporting.
    """

    intrinsic_dim: int
    total: int
    boundary: int
    interior: int
    normalized_volume: Optional[int]
    vertices: tuple = field(default=(), compare=False)

    def invariants(self) -> tuple:
        return (self.intrinsic_dim, self.total, self.boundary, self.interior, self.normalized_volume)

    def to_dict(self) -> dict:
        return {
            "intrinsic_dim": self.intrinsic_dim,
            "total": self.total,
            "boundary": self.boundary,
            "interior": self.interior,
            "normalized_volume": self.normalized_volume,
            "vertices": [list(v) for v in sorted(self.vertices)],
        }


def polytope_fingerprint(P: LatticePolytope) -> Fingerprint:
    total, boundary, interior = count_lattice_points(P)
    nvol = P.normalized_volume if (P.intrinsic_dim <= 3 or P.is_simplex) else None
    return Fingerprint(P.intrinsic_dim, total, boundary, interior, nvol, P.vertices)


def fingerprint(p: LaurentPoly) -> Fingerprint:
    return polytope_fingerprint(newton_polytope(p))


def embed(p: LaurentPoly, iota, names: Optional[Sequence[str]] = None) -> LaurentPoly:
    """Send each exponent ``a`` to ``(a, iota @ a)``.

    ``iota`` has one column per variable of ``p``; its rows become new
    variables (named ``names`` or ``e1, e2, ...``).
    """
    iota = iota if isinstance(iota, IntMatrix) else IntMatrix.of(iota)
    if iota.nrows and iota.ncols != p.nvars:
        raise ValueError(f"embedding has {iota.ncols} columns, polynomial has {p.nvars} variables")
    extra = iota.nrows
    if names is None:
        names = []
        i = 1
        while len(names) < extra:
            if f"e{i}" not in p.variables:
                names.append(f"e{i}")
            i += 1
    if len(names) != extra:
        raise ValueError(f"need {extra} new variable names")
    variables = VariableList(tuple(p.variables) + tuple(names))
    support = frozenset(a + (iota @ a if extra else ()) for a in p.support)
    return LaurentPoly(variables, support)


def apply_unimodular(p: LaurentPoly, A, t: Optional[Sequence[int]] = None) -> LaurentPoly:
    """Monomial map ``s^a -> s^(A a + t)`` with ``|det A| = 1``."""
    A = A if isinstance(A, IntMatrix) else IntMatrix.of(A)
    k = p.nvars
    if A.shape != (k, k):
        raise ValueError(f"expected a {k}x{k} matrix, got {A.shape}")
    if abs(det_bareiss(A)) != 1:
        raise NotUnimodularError("matrix is not in GL(k, Z)")
    t = tuple(t) if t is not None else (0,) * k
    if len(t) != k:
        raise ValueError("translation has the wrong length")
    support = frozenset(tuple(x + y for x, y in zip(A @ a, t)) for a in p.support)
    return LaurentPoly(p.variables, support)


def is_simplex_unimodular_standard(P: LatticePolytope) -> bool:
    """True iff the simplex ``P`` has normalized volume 1 in its own lattice."""
    if not P.is_simplex:
        raise ValueError(f"not a simplex: {len(P.vertices)} vertices in dimension {P.intrinsic_dim}")
    v = P.reduced_vertices
    return abs(det_bareiss([_sub(x, v[0]) for x in v[1:]])) == 1
