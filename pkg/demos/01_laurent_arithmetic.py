"""Arithmetic in F2[x^{+-1}, y^{+-1}]: cancellation, Frobenius, substitution."""
from newtonfill import MonomialSubstitution, VariableList, parse_poly, render, substitute

V = VariableList.parse("x,y")

p = parse_poly("x + y", V)
q = parse_poly("x + 1", V)
print("p         =", render(p))
print("q         =", render(q))
print("p + p     =", render(p + p))          # every coefficient is 2 = 0
print("p * q     =", render(p * q))
print("p^2       =", render(p ** 2))          # squaring only doubles exponents
print("p^4       =", render(p ** 4))

# Monomial maps are the ring automorphisms we care about; terms may collide and cancel.
tilde = VariableList.parse("a,b")
sigma = MonomialSubstitution.from_mapping(tilde, ["x", "y", "z"], {"a": "x*y^-1", "b": "z^-2"})
alpha2 = parse_poly("a^2 + b^2 + a", tilde)
print()
print("alpha^2(a, b)              =", render(alpha2))
print("with a = x/y and b = z^-2  =", render(substitute(alpha2, sigma)))

collapse = MonomialSubstitution.from_mapping(V, ["t"], {"x": "t", "y": "t"})
print("x + y with x = y = t       =", render(collapse(p)))
