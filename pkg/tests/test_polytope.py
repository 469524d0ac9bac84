import itertools
import random

import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st
from scipy.spatial import ConvexHull

from newtonfill.acceptance import random_unimodular, triangle_oracle
from newtonfill.errors import DimensionPolicyError, NotUnimodularError, ZeroPolynomialError
from newtonfill.intlinalg import IntMatrix
from newtonfill.laurent import LaurentPoly, VariableList, parse_poly
from newtonfill.polytope import (
    apply_unimodular,
    count_lattice_points,
    embed,
    fingerprint,
    is_simplex_unimodular_standard,
    lattice_reduce,
    newton_polytope,
    polytope_from_points,
)
from newtonfill.scenarios import alpha_poly, scenario_beta11

from conftest import XY, XYZ, polys


def hull_oracle(points):
    """Brute-force (total, boundary, interior, vertices) for a full-dimensional point set."""
    pts = np.array(points, dtype=float)
    hull = ConvexHull(pts)
    lo = pts.min(axis=0).astype(int)
    hi = pts.max(axis=0).astype(int)
    total = boundary = 0
    for q in itertools.product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
        vals = hull.equations[:, :-1] @ np.array(q, dtype=float) + hull.equations[:, -1]
        if np.all(vals <= 1e-9):
            total += 1
            boundary += bool(np.any(np.abs(vals) <= 1e-9))
    verts = {tuple(int(x) for x in pts[i]) for i in hull.vertices}
    return total, boundary, total - boundary, verts


def test_newton_polytope_examples():
    P = newton_polytope(parse_poly("x^2 + y^2 + x", XY))
    assert P.vertices == ((0, 2), (1, 0), (2, 0))
    assert P.intrinsic_dim == 2
    Q = newton_polytope(parse_poly("x^3*y^-2", XY))
    assert Q.intrinsic_dim == 0 and Q.vertices == ((3, -2),)
    a19 = scenario_beta11().values["a19"]
    R = newton_polytope(a19)
    assert R.ambient_dim == 4 and R.intrinsic_dim == 2 and len(R.vertices) == 3
    with pytest.raises(ZeroPolynomialError):
        newton_polytope(LaurentPoly.zero(XY))


def test_count_examples():
    assert count_lattice_points(polytope_from_points([(1, 0), (2, 0), (0, 2)])) == (4, 4, 0)
    assert count_lattice_points(polytope_from_points([(0, 0), (3, 0)])) == (4, 2, 2)
    assert count_lattice_points(polytope_from_points([(5, 5)])) == (1, 1, 0)


def test_triangle_in_three_space():
    # hull of (1,0,0), (n,0,0), (0,0,2n) at n=3; counted by hand: 4 + 3 + 2 + 1 on the
    # lines z = 0, 1..2, 3..4, 5..6 -> 10 points, 6 on the boundary
    fp = fingerprint(LaurentPoly(XYZ, frozenset([(1, 0, 0), (3, 0, 0), (0, 0, 6)])))
    assert fp.invariants() == (2, 10, 6, 4, 12)


def test_fingerprint_examples():
    assert fingerprint(alpha_poly(2)).invariants() == (2, 4, 4, 0, 2)
    assert fingerprint(parse_poly("x", XY)).invariants() == (0, 1, 1, 0, 0)
    beta3 = scenario_beta11().hull_poly(3)
    assert fingerprint(beta3).total == 10


def test_alpha_hull_vertices():
    for n in range(2, 16):
        assert set(fingerprint(alpha_poly(n)).vertices) == {(1, 0), (n, 0), (0, n)}


def test_lattice_reduce_examples():
    assert lattice_reduce([(0, 0)]).dim == 0
    assert lattice_reduce([(1, -1, 0, 0), (2, -2, 0, 0), (0, 0, -2, 0)]).dim == 2
    red = lattice_reduce([(0, 0), (2, 2), (4, 4)])
    assert red.dim == 1
    assert [tuple(map(abs, b)) for b in red.basis.rows] == [(1, 1)]
    assert sorted(red.points) == [(0,), (2,), (4,)]
    # (1,1) and (3,3) are lattice points of the segment too
    assert count_lattice_points(polytope_from_points([(0, 0), (2, 2), (4, 4)])) == (5, 2, 3)


@given(st.sets(st.tuples(*[st.integers(-6, 6)] * 4), min_size=1, max_size=7))
def test_lattice_reduce_round_trip(points):
    red = lattice_reduce(points)
    for p in points:
        c = red.project(p)
        assert red.lift(c) == tuple(p)


def test_unit_and_doubled_cubes():
    cube = list(itertools.product([0, 1], repeat=3))
    assert fingerprint(LaurentPoly(XYZ, frozenset(cube))).invariants() == (3, 8, 8, 0, 6)
    big = list(itertools.product([0, 2], repeat=3))
    assert fingerprint(LaurentPoly(XYZ, frozenset(big))).invariants() == (3, 27, 26, 1, 48)


def test_octahedron():
    pts = [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]
    P = polytope_from_points(pts)
    assert count_lattice_points(P) == (7, 6, 1)
    assert P.normalized_volume == 8


def test_high_dimension_policy():
    V4 = VariableList(["a", "b", "c", "d"])
    cube = LaurentPoly(V4, frozenset(itertools.product([0, 1], repeat=4)))
    with pytest.raises(DimensionPolicyError):
        fingerprint(cube)
    simplex2 = [(0, 0, 0, 0)] + [tuple(2 * (i == j) for j in range(4)) for i in range(4)]
    fp = fingerprint(LaurentPoly(V4, frozenset(simplex2)))
    # points of 2*Delta_4: C(6, 4) = 15; none strictly inside
    assert fp.invariants() == (4, 15, 15, 0, 16)


def test_simplex_standardness():
    for d in range(1, 7):
        pts = [(0,) * d] + [tuple(int(i == j) for j in range(d)) for i in range(d)]
        assert is_simplex_unimodular_standard(polytope_from_points(pts))
    assert not is_simplex_unimodular_standard(polytope_from_points([(0, 0), (2, 0), (0, 1)]))
    with pytest.raises(ValueError):
        is_simplex_unimodular_standard(polytope_from_points([(0, 0), (1, 0), (0, 1), (1, 1)]))


def test_embed_examples():
    a2 = alpha_poly(2)
    padded = embed(a2, IntMatrix.zeros(2, 2))
    assert padded.nvars == 4 and fingerprint(padded) == fingerprint(a2)
    summed = embed(a2, [[1, 1]])
    assert summed.variables == ("x", "y", "e1")
    assert fingerprint(summed).total == 4
    with pytest.raises(ValueError):
        embed(a2, [[1, 1, 1]])


@settings(max_examples=40)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=2, max_size=2), min_size=1, max_size=3))
def test_embed_keeps_fingerprint(iota):
    a5 = alpha_poly(5)
    assert fingerprint(embed(a5, iota)) == fingerprint(a5)


def test_apply_unimodular_examples():
    A = IntMatrix.of([[1, 0, 0], [1, 1, 0], [0, 0, -1]])  # x -> xy, y -> y, z -> z^-1
    s = scenario_beta11()
    for n in range(2, 7):
        img = apply_unimodular(s.hull_poly(n), A)
        assert set(fingerprint(img).vertices) == {(1, 0, 0), (n, 0, 0), (0, 0, 2 * n)}
    p = parse_poly("x + y^3", XY)
    assert apply_unimodular(p, IntMatrix.identity(2), (0, 0)) == p
    with pytest.raises(NotUnimodularError):
        apply_unimodular(p, [[2, 0], [0, 1]])


def test_fingerprint_json_layout():
    d = fingerprint(parse_poly("y^2 + x + x^2", XY)).to_dict()
    assert list(d) == ["intrinsic_dim", "total", "boundary", "interior", "normalized_volume", "vertices"]
    assert d["vertices"] == [[0, 2], [1, 0], [2, 0]]


@settings(max_examples=300)
@given(st.lists(st.tuples(st.integers(-8, 8), st.integers(-8, 8)), min_size=3, max_size=3))
def test_triangles_against_scipy(tri):
    (ax, ay), (bx, by), (cx, cy) = tri
    assume((bx - ax) * (cy - ay) - (by - ay) * (cx - ax) != 0)
    got = count_lattice_points(polytope_from_points(tri))
    total, boundary, interior, _ = hull_oracle(tri)
    assert got == (total, boundary, interior) == triangle_oracle(*tri)


@settings(max_examples=150)
@given(st.sets(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=3, max_size=9))
def test_polygons_against_scipy(points):
    P = polytope_from_points(points)
    assume(P.intrinsic_dim == 2)
    total, boundary, interior, verts = hull_oracle(sorted(points))
    assert count_lattice_points(P) == (total, boundary, interior)
    assert set(P.vertices) == verts
    assert 2 * interior + boundary - 2 == P.normalized_volume


@settings(max_examples=100, deadline=None)
@given(st.sets(st.tuples(*[st.integers(-3, 3)] * 3), min_size=4, max_size=9))
def test_polyhedra_against_scipy(points):
    P = polytope_from_points(points)
    assume(P.intrinsic_dim == 3)
    total, boundary, interior, verts = hull_oracle(sorted(points))
    assert count_lattice_points(P) == (total, boundary, interior)
    assert set(P.vertices) == verts
    hull = ConvexHull(np.array(sorted(points), dtype=float))
    assert P.normalized_volume == round(6 * hull.volume)


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 3).flatmap(lambda k: st.tuples(st.just(k), polys(VariableList([f"t{j}" for j in range(k)]), 7, 3, 1))),
       st.randoms(use_true_random=False))
def test_unimodular_invariance(kp, rnd):
    k, p = kp
    A = random_unimodular(rnd, k)
    t = tuple(rnd.randint(-5, 5) for _ in range(k))
    assert fingerprint(apply_unimodular(p, A, t)) == fingerprint(p)


@given(polys(XYZ, 6, 3, 1), st.tuples(*[st.integers(-9, 9)] * 3))
def test_translation_invariance(p, m):
    assert fingerprint(p.shift(m)) == fingerprint(p)


@given(polys(XY, 8, 5, 1))
def test_pick_on_polygons(p):
    fp = fingerprint(p)
    if fp.intrinsic_dim == 2:
        assert 2 * fp.interior + fp.boundary - 2 == fp.normalized_volume
