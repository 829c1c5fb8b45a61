"""Recognising retractions, recovering the generator and the normal form x + y*q."""

import json

from polyretract import (
    Endo,
    Poly,
    am_reduce,
    compose,
    cor31_retraction,
    invert_tame,
    normalize_retract,
    random_tame,
    subduce,
    verify_retraction,
)

x, y = Poly.gens()
zero = Poly.zero()
p = x + x**2 * y

print("p^2 + 3p in Q[p]:", subduce(p**2 + 3 * p, p))

res = am_reduce(p**2 + p, p**2)
print("generator of Q[p^2 + p, p^2]:", res.generator)
for step in res.steps:
    print("   ", step)

rep = verify_retraction(Endo(p, zero))
print("(p, 0):", rep.status.value, "with generator", rep.cert.generator)
print("(x^2, 0):", verify_retraction(Endo(x**2, zero)).status.value)

# hide a retract behind a random automorphism, then find it again
word = random_tame(seed=8, word_len=2, coeff_bound=2, deg_bound=2)
psi, psinv = word.endo(), invert_tame(word).endo()
phi = compose(psinv, compose(Endo(x + y * (x - y**2), zero), psi))
print("disguised retraction:", phi)
norm = normalize_retract(phi)
print("generator       :", norm.cert.generator)
print("normalizing word:", json.dumps(norm.psi.to_json()))
print("normal form     :", norm.p_normal, " q =", norm.q)
print("certificate replays:", norm.cert.verify())

c31 = cor31_retraction(x + x**2 - y**2)
print("x + x^2 - y^2:", c31.status.value, c31.cert.retraction)
