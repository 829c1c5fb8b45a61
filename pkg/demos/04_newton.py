"""Newton polygons, radial similarity and elimination of pure x-powers."""

from polyretract import Poly, axis_edge, newton_polygon, radially_similar, thm13_reduce

x, y = Poly.gens()
p = x + x**2 * y

A = newton_polygon(p)
print("polygon of p       :", A.vertices)
print("edge on the x-axis :", axis_edge(p, "x-axis"))
print("polygon of p^3     :", newton_polygon(p**3).vertices)
print("ratio p ~ p^3      :", radially_similar(A, newton_polygon(p**3)))
print("ratio p ~ x^3      :", radially_similar(A, newton_polygon(x**3)))

# subtract multiples of powers of p until no pure power of x is left in q
for m in range(1, 5):
    res = thm13_reduce(p, x**m)
    print(f"q = x^{m}: steps {res.steps}, q_final = {res.q_final}, similar: {res.similar}")
