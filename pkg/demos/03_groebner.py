"""Reduced Groebner bases and the certificates built on them."""

from polyretract import Poly, print_poly, buchberger, ideal_member, subalg_member, unimodular_cert
from polyretract.groebner import LEX

x, y = Poly.gens()
p = x + x**2 * y

print("basis of <1 + 2xy, x^2>:", [print_poly(g) for g in buchberger([1 + 2 * x * y, x**2])])
print("lex basis of <x^2 + y^2 - 1, x - y>:", [print_poly(g) for g in buchberger([x**2 + y**2 - 1, x - y], LEX)])

cof = ideal_member(1 + 0 * x, [p.partial("x"), p.partial("y")])
print("1 = a*p_x + b*p_y with a, b =", [print_poly(c) for c in cof])

cert = unimodular_cert(p)
print("unimodular gradient of", p, ": u =", cert.u, " v =", cert.v, " verified:", cert.verify())

sub = subalg_member(x, x + y**2, y)
print("x in Q[x + y^2, y]:", sub.expression, "(P, Q stand for the two generators)")
print("x in Q[x^2, y^2]:", subalg_member(x, x**2, y**2))
