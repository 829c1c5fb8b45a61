"""Iterating an endomorphism: degree growth, fixed polynomials and Keller maps."""

from polyretract import Endo, Poly, print_poly, cor17_consistency, degree_trace, fixed_polys

x, y = Poly.gens()

for phi in (Endo(x**2, y**2), Endo(x + y**2, y), Endo(x * y, y)):
    print(phi)
    print("   degrees of phi^k:", degree_trace(phi, 4).records)
    print("   fixed up to degree 2:", [print_poly(f) for f in fixed_polys(phi, 2).basis])
    rep = cor17_consistency(phi, 2)
    print("   stable-image check:", rep.status.value)
