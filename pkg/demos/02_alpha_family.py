"""Powers of [[x+y, 1], [x, 1]]: irregular monomial counts, regular Newton polygons.

The number of surviving monomials in the upper-left entry jumps around
(cancellation mod 2), yet the Newton polygon is always the triangle with
vertices x, x^n, y^n.
"""
from newtonfill import alpha_sequence, fingerprint
from newtonfill.scenarios import alpha_fingerprint_formula, alpha_poly

counts = alpha_sequence(40)
print("monomial counts, n = 1..40:")
for start in range(0, 40, 10):
    print("  " + " ".join(f"{c:4d}" for c in counts[start:start + 10]))

print()
print(" n  monos  dim  total  bdry  int  nvol  vertices")
for n in (2, 3, 5, 8, 13, 21):
    fp = fingerprint(alpha_poly(n))
    assert fp.invariants() == alpha_fingerprint_formula(n)
    print(f"{n:2d}  {counts[n - 1]:5d}  {fp.intrinsic_dim:3d}  {fp.total:5d}  {fp.boundary:4d}"
          f"  {fp.interior:3d}  {fp.normalized_volume:4d}  {sorted(fp.vertices)}")
