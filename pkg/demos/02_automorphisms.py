"""Jacobians, tame words and automorphism checks."""

import json

from polyretract import Endo, Poly, alg_dependent, compose, invert_tame, is_automorphism, jac_det, random_tame

x, y = Poly.gens()

word = random_tame(seed=3, word_len=3, coeff_bound=2, deg_bound=2)
phi = word.endo()
print("tame word     :", json.dumps(word.to_json()))
print("as a map      :", phi)
print("Jacobian det  :", jac_det(phi))

inv = invert_tame(word).endo()
print("inverse       :", inv)
print("phi o inv = id:", compose(phi, inv).is_identity())

# the same inverse recovered without knowing the word, via an elimination basis
ok, inv2 = is_automorphism(phi)
print("Groebner test :", ok, inv2 == inv)

print("(x^2, y^2) automorphism?", is_automorphism(Endo(x**2, y**2))[0], " det", jac_det(Endo(x**2, y**2)))

p = x + x**2 * y
print("p, p^2 + p dependent?", alg_dependent(p, p**2 + p))
print("x, y dependent?      ", alg_dependent(x, y))
