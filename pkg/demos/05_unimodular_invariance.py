"""Fingerprints survive monomial changes of variables and re-embeddings."""
import random

from newtonfill import apply_unimodular, embed, fingerprint
from newtonfill.acceptance import random_unimodular
from newtonfill.scenarios import alpha_poly

rng = random.Random(7)
p = alpha_poly(6)
base = fingerprint(p)
print("alpha^6 fingerprint:", base.invariants())
for _ in range(5):
    A = random_unimodular(rng, 2)
    t = (rng.randint(-9, 9), rng.randint(-9, 9))
    q = apply_unimodular(p, A, t)
    print(f"  A = {A.tolist()}, t = {t}: vertices {sorted(fingerprint(q).vertices)}, same = {fingerprint(q) == base}")

# Placing the polygon inside a bigger lattice does not change it either.
lifted = embed(p, [[1, 2], [-3, 1]])
print("embedded in", lifted.nvars, "variables:", fingerprint(lifted).invariants())
