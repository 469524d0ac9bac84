"""The nine end-to-end acceptance checks, runnable from code or ``selftest``.

Each check returns a ``CriterionResult`` carrying the measured values, so
a failure says what was observed and not just that something broke.
Randomized checks draw from a seeded ``random.Random`` and are
reproducible.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable

from . import scenarios
from .intlinalg import IntMatrix
from .laurent import LaurentPoly, VariableList, extend_with_pinch_variable
from .matrix import LaurentMatrix
from .polytope import apply_unimodular, count_lattice_points, fingerprint, polytope_from_points

DEFAULT_SEED = 20240917


@dataclass(frozen=True)
class CriterionResult:
    number: int
    title: str
    passed: bool
    measured: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number}. {self.title}: {self.measured}"

    def to_dict(self) -> dict:
        return {"criterion": self.number, "title": self.title, "passed": self.passed, "measured": self.measured}


# -- random generators --------------------------------------------------------

def random_poly(rng: random.Random, variables, max_terms=6, spread=3, allow_zero=False) -> LaurentPoly:
    variables = VariableList(variables)
    lo = 0 if allow_zero else 1
    support = set()
    for _ in range(rng.randint(lo, max_terms)):
        support ^= {tuple(rng.randint(-spread, spread) for _ in variables)}
    if not support and not allow_zero:
        support = {tuple(rng.randint(-spread, spread) for _ in variables)}
    return LaurentPoly(variables, frozenset(support))


def random_unimodular(rng: random.Random, k: int, steps=20, mult=2) -> IntMatrix:
    """Product of at most ``steps`` elementary integer row operations."""
    A = [[int(i == j) for j in range(k)] for i in range(k)]
    for _ in range(rng.randint(0, steps)):
        op = rng.random()
        if k > 1 and op < 0.7:
            i, j = rng.sample(range(k), 2)
            q = rng.choice([q for q in range(-mult, mult + 1) if q])
            A[i] = [a + q * b for a, b in zip(A[i], A[j])]
        elif k > 1 and op < 0.85:
            i, j = rng.sample(range(k), 2)
            A[i], A[j] = A[j], A[i]
        else:
            i = rng.randrange(k)
            A[i] = [-a for a in A[i]]
    return IntMatrix.of(A)


def triangle_oracle(a, b, c):
    """Brute-force ``(total, boundary, interior)`` for a lattice triangle.

    Each point of the bounding box is tested by the signs of the three
    edge cross products; on an edge means one of them vanishes.
    """
    def cross(o, p, q):
        return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])

    if cross(a, b, c) < 0:
        b, c = c, b
    xs = [a[0], b[0], c[0]]
    ys = [a[1], b[1], c[1]]
    total = boundary = 0
    for x in range(min(xs), max(xs) + 1):
        for y in range(min(ys), max(ys) + 1):
            p = (x, y)
            s1, s2, s3 = cross(a, b, p), cross(b, c, p), cross(c, a, p)
            if s1 >= 0 and s2 >= 0 and s3 >= 0:
                total += 1
                if s1 == 0 or s2 == 0 or s3 == 0:
                    boundary += 1
    return total, boundary, total - boundary


def pick_holds(fp) -> bool:
    return 2 * fp.interior + fp.boundary - 2 == fp.normalized_volume


# -- criteria -------------------------------------------------------------------

def criterion_1(seed=DEFAULT_SEED) -> CriterionResult:
    got = scenarios.alpha_sequence(40)
    want = list(scenarios.ALPHA_MONOMIAL_COUNTS)
    bad = [n for n, (g, w) in enumerate(zip(got, want), 1) if g != w]
    if len(want) != 40:
        bad = bad or [len(want)]
    if bad:
        n = bad[0]
        g = got[n - 1] if n <= len(got) else None
        w = want[n - 1] if n <= len(want) else None
        msg = f"{len(bad)} mismatches, first at n={n}: computed {g}, expected {w}"
    else:
        msg = f"40 of 40 counts match, last {got[-1]}"
    return CriterionResult(1, "alpha monomial-count sequence", not bad, msg)


def criterion_2(seed=DEFAULT_SEED) -> CriterionResult:
    bad = []
    for n in range(2, 31):
        fp = fingerprint(scenarios.alpha_poly(n))
        if fp.invariants() != scenarios.alpha_fingerprint_formula(n) or not pick_holds(fp):
            bad.append((n, fp.invariants()))
    msg = f"first mismatch n={bad[0][0]}: {bad[0][1]}" if bad else "n=2..30 match the closed form"
    return CriterionResult(2, "alpha-family fingerprints", not bad, msg)


def _orbit_criterion(number, title, scenario, hull_vertices):
    rows = scenarios.orbit_table(scenario, 20, check=False)
    total_bad = [
        (r.n, r.fingerprint.total) for r in rows if r.n >= 2 and r.fingerprint.total != r.n * r.n + r.n - 1
    ]
    hull_bad = [
        n for n in range(1, 21)
        if set(fingerprint(scenario.hull_poly(n)).vertices) != hull_vertices(n)
    ]
    distinct, witness = scenarios.distinctness_verdict(rows)
    parts = []
    if total_bad:
        n, t = total_bad[0]
        ns = [n for n, _ in total_bad]
        parts.append(
            f"total != n^2+n-1 at {len(ns)} of 19 n (n={ns[0]}..{ns[-1]}); "
            f"n={n} has {t}, expected {n * n + n - 1}"
        )
    else:
        parts.append("totals n^2+n-1 for n=2..20")
    parts.append(f"hull vertices wrong at n={hull_bad}" if hull_bad else "hull vertices match for n=1..20")
    parts.append("distinct" if distinct else f"collision {witness}")
    return CriterionResult(number, title, not total_bad and not hull_bad and distinct, "; ".join(parts))


def criterion_3(seed=DEFAULT_SEED) -> CriterionResult:
    return _orbit_criterion(
        3,
        "beta11 orbit",
        scenarios.scenario_beta11(),
        lambda n: {(0, 0, -2 * n), (1, -1, 0), (n, -n, 0)},
    )


def criterion_4(seed=DEFAULT_SEED) -> CriterionResult:
    return _orbit_criterion(
        4,
        "lambda1 orbit",
        scenarios.scenario_lambda1(),
        lambda n: {(0, 0, -2 * n), (-1, 1, -1), (-n, n, -n)},
    )


def criterion_5(seed=DEFAULT_SEED) -> CriterionResult:
    bad = []
    count = 0
    for n in range(3, 14, 2):
        for i in range(1, n + 1):
            count += 1
            try:
                t = scenarios.torus_value(n, i)
                ok = len(t.value) == n and abs(t.det) == 1 and scenarios.torus_simplex_check(t)
            except Exception as exc:  # a construction failure is a criterion failure
                ok = False
                bad.append((n, i, str(exc)))
                continue
            if not ok:
                bad.append((n, i, "check failed"))
    msg = f"failures {bad[:3]}" if bad else f"{count} (n, i) pairs: n monomials, standard simplex, |det S| = 1, S S^-1 = Id"
    return CriterionResult(5, "torus knot simplices", not bad, msg)


def criterion_6(seed=DEFAULT_SEED, trials=500) -> CriterionResult:
    rng = random.Random(seed)
    V = VariableList(["x", "y", "z"])
    bad = 0
    for _ in range(trials):
        factors = []
        for _ in range(rng.randint(1, 4)):
            factors.append([[random_poly(rng, V, 3, 2, allow_zero=True) for _ in range(2)] for _ in range(2)])
        u = tuple(rng.randint(-3, 3) for _ in V)
        u_inv = tuple(-e for e in u)
        plain = LaurentMatrix.identity(V, 2)
        primed = LaurentMatrix.identity(V, 2)
        for (a, b), (c, d) in factors:
            plain = plain @ LaurentMatrix(V, ((a, b), (c, d)))
            primed = primed @ LaurentMatrix(V, ((a, b.shift(u)), (c.shift(u_inv), d)))
        ok = (
            primed.diagonal() == plain.diagonal()
            and primed[0, 1] == plain[0, 1].shift(u)
            and primed[1, 0] == plain[1, 0].shift(u_inv)
        )
        bad += not ok
    return CriterionResult(
        6, "conjugation by diag(1, u)", bad == 0, f"{trials - bad} of {trials} products keep their diagonal"
    )


def criterion_7(seed=DEFAULT_SEED, trials=1000) -> CriterionResult:
    rng = random.Random(seed + 7)
    bad = pick_bad = pick_seen = 0
    for _ in range(trials):
        k = rng.randint(1, 3)
        V = VariableList([f"t{j}" for j in range(1, k + 1)])
        p = random_poly(rng, V, 7, 3)
        A = random_unimodular(rng, k)
        t = tuple(rng.randint(-5, 5) for _ in range(k))
        before = fingerprint(p)
        after = fingerprint(apply_unimodular(p, A, t))
        bad += before != after
        for fp in (before, after):
            if fp.intrinsic_dim == 2:
                pick_seen += 1
                pick_bad += not pick_holds(fp)
    msg = f"{trials - bad} of {trials} fingerprints unchanged; Pick holds on {pick_seen - pick_bad} of {pick_seen} polygons"
    return CriterionResult(7, "unimodular invariance", bad == 0 and pick_bad == 0, msg)


def criterion_8(seed=DEFAULT_SEED, samples=10_000, box=10) -> CriterionResult:
    rng = random.Random(seed + 8)
    seen = set()
    while len(seen) < samples:
        tri = tuple(sorted((rng.randint(-box, box), rng.randint(-box, box)) for _ in range(3)))
        (ax, ay), (bx, by), (cx, cy) = tri
        if (bx - ax) * (cy - ay) - (by - ay) * (cx - ax) != 0:
            seen.add(tri)
    bad = []
    for tri in sorted(seen):
        got = count_lattice_points(polytope_from_points(tri))
        if got != triangle_oracle(*tri):
            bad.append(tri)
    msg = f"{len(seen) - len(bad)} of {len(seen)} distinct triangles agree with the oracle"
    if bad:
        msg += f"; first disagreement {bad[0]}"
    return CriterionResult(8, "lattice counting vs brute force", not bad, msg)


def criterion_9(seed=DEFAULT_SEED, trials=500) -> CriterionResult:
    rng = random.Random(seed + 9)
    bad = []
    for _ in range(trials):
        k = rng.randint(1, 2)
        V = VariableList([f"t{j}" for j in range(1, k + 1)])
        f = random_poly(rng, V, 6, 3)
        g = random_poly(rng, V, 6, 3, allow_zero=True)
        before = fingerprint(f).total
        after = fingerprint(extend_with_pinch_variable(f, g)).total
        if after < before:
            bad.append((before, after))
    msg = f"{trials - len(bad)} of {trials} pairs keep or grow the lattice point count"
    return CriterionResult(9, "face monotonicity under pinching", not bad, msg)


CRITERIA: dict = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
}


def run_all(seed: int = DEFAULT_SEED, only=None, on_result: Callable = None) -> list:
    results = []
    for number, check in CRITERIA.items():
        if only is not None and number not in only:
            continue
        result = check(seed)
        results.append(result)
        if on_result:
            on_result(result)
    return results
