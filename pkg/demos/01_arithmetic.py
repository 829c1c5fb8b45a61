"""Exact sparse arithmetic, parsing and printing."""

from polyretract import Endo, Poly, UniPoly, parse_mapping, parse_poly, print_poly, substitute

x, y = Poly.gens()

f = parse_poly("(x + 1/2*y)^3 - x^3")
print("f            =", print_poly(f))
print("degree       =", f.degree())
print("df/dy        =", print_poly(f.partial("y")))

# coefficients stay exact: ints when integral, Fractions otherwise
print("coeff of x*y^2:", f.coeff((1, 2)))

# substitution x -> x + y, y -> x*y
g = substitute(x * y + x, [x + y, x * y])
print("substituted  =", print_poly(g))

h = UniPoly([1, 0, -2])
print("h(t) =", h, "  h(x + y) =", print_poly(h.compose(x + y)))

phi = Endo(*parse_mapping("x -> x + y^2; y -> y"))
print("parsed map   :", phi)
