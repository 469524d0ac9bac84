"""Iterating a monodromy on two filling augmentations and fingerprinting each step.

Every step produces a Newton polygon with a different lattice point count,
so no two augmentations along the orbit can be related by a monomial change
of variables.
"""
from newtonfill import distinctness_verdict, get_scenario, orbit_table
from newtonfill.polytope import fingerprint

for name in ("beta11", "lambda1"):
    s = get_scenario(name)
    print(f"== {name}: variables {', '.join(s.variables)}")
    print(f"   step matrix = z * R with z = {dict(zip(s.variables, s.scalar))}")
    print(f"   R in x, y, z = {s.reduced_xyz}")
    rows = orbit_table(s, 12)
    print("    n  monos  total  bdry  int  nvol")
    for r in rows:
        fp = r.fingerprint
        print(f"   {r.n:2d}  {r.monomials:5d}  {fp.total:5d}  {fp.boundary:4d}  {fp.interior:3d}  {fp.normalized_volume:4d}")
    ok, witness = distinctness_verdict(rows)
    print("   pairwise distinct:", ok, "" if ok else witness)
    print("   hull of the reduced entry at n = 5:", sorted(fingerprint(s.hull_poly(5)).vertices))
    print()

# The total is n^2 + 1: the triangle (1,0), (n,0), (0,2n) has 2n boundary points
# and area n(n-1), so Pick gives (n-1)^2 interior points.
for n in range(2, 7):
    print(f"n={n}: n^2+1 = {n * n + 1}, 2n + (n-1)^2 = {2 * n + (n - 1) ** 2}")
