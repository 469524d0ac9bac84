"""(2, n) torus knots: the pinch-filling value of every crossing is a unit simplex."""
from newtonfill import render, torus_simplex_check, torus_value

t = torus_value(5, 3)
print("n = 5, pinch crossing 3")
print("value:", render(t.value))
print("S =")
print(t.S)
print("S^-1 =")
print(t.S_inv)
print("|det S| =", abs(t.det), " standard simplex:", torus_simplex_check(t))
print()

for n in range(3, 14, 2):
    results = [torus_simplex_check(torus_value(n, i)) for i in range(1, n + 1)]
    print(f"n = {n:2d}: {sum(results)} of {n} crossings give a unit simplex")
