import random
from fractions import Fraction

import oracles
import pytest
from conftest import as_dict, random_poly
from hypothesis import given
from hypothesis import strategies as st

from polyretract import (
    XY,
    Endo,
    NotAMReducible,
    NotARetract,
    Poly,
    PolyError,
    RetractStatus,
    UniPoly,
    am_reduce,
    apply,
    compose,
    cor12_retraction,
    cor14_lemmas,
    cor31_retraction,
    invert_tame,
    normalize_retract,
    random_tame,
    subduce,
    verify_retraction,
)
from polyretract.retract import Cor31Status, replay

x, y = Poly.gens()
zero = Poly.zero()
p = x + x**2 * y


def test_subduce_examples():
    f = p**2 + 3 * p
    assert as_dict(f) == oracles.uni_eval([0, 3, 1], as_dict(p), 2)
    assert subduce(f, p) == UniPoly([0, 3, 1])
    assert subduce(x, x) == UniPoly.t()
    assert subduce(y, x) is None


def test_subduce_rational_generator():
    q = 2 * (x + y**2) + 1
    h = UniPoly([5, -1, 3])
    third = UniPoly([Fraction(c, 3) for c in (5, -1, 3)])
    assert subduce(h.compose(q) / 3, q) == third
    assert subduce(h.compose(q), q / 7) == UniPoly([5, -7, 147])


@given(st.integers(0, 10**6))
def test_subduce_recovers_random_h(seed):
    rng = random.Random(seed)
    q = random_poly(rng, 5, 3, rational=True)
    if q.is_constant():
        return
    h = UniPoly(rng.randint(-5, 5) for _ in range(rng.randint(1, 4)))
    assert subduce(h.compose(q), q) == h
    # adding a monomial outside Q[q] breaks membership
    stray = x ** (int(q.degree()) * 3 + 1) * y
    assert subduce(h.compose(q) + stray, q) is None


def test_am_reduce_example():
    f, g = p**2 + p, p**2
    res = am_reduce(f, g)
    assert res.generator == p
    assert [(s.kind, s.c, s.k) for s in res.steps] == [
        ("reduce_first", 1, 1),
        ("reduce_second", 1, 2),
    ]
    assert replay(f, g, res.steps) == (p, zero)
    assert res.first_in_generator == UniPoly([0, 1, 1])
    assert res.second_in_generator == UniPoly([0, 0, 1])


def test_am_reduce_second_zero():
    f = 3 * x**2 * y - x
    res = am_reduce(f, zero)
    assert res.generator == f and res.steps == ()


def test_am_reduce_failure():
    with pytest.raises(NotAMReducible):
        am_reduce(p**2, p**3 + p)  # shadow degrees 2 and 3
    with pytest.raises(NotAMReducible):
        am_reduce(x, y)


@given(st.integers(0, 10**6))
def test_am_replay_property(seed):
    rng = random.Random(seed)
    w = random_tame(seed, 3, 3, 2)
    g = w.apply(x + y * random_poly(rng, 2, 2))
    if g.is_constant():
        return
    a = UniPoly(rng.randint(-3, 3) for _ in range(rng.randint(1, 3)))
    b = UniPoly(rng.randint(-3, 3) for _ in range(rng.randint(1, 3)))
    f1, f2 = a.compose(g), b.compose(g)
    if f1.is_constant() and f2.is_constant():
        return
    res = am_reduce(f1, f2)
    assert replay(f1, f2, res.steps) == (res.generator, zero)
    # the generator lies in Q[g] and both inputs lie in Q[generator]
    assert subduce(res.generator, g) is not None
    assert subduce(f1, res.generator) == res.first_in_generator
    assert subduce(f2, res.generator) == res.second_in_generator


def test_verify_retraction_examples():
    rep = verify_retraction(Endo(p, zero))
    assert rep.status is RetractStatus.PROPER
    assert rep.cert.generator == p
    assert rep.cert.verify()
    assert verify_retraction(Endo.identity()).status is RetractStatus.WHOLE_RING
    assert verify_retraction(Endo(x**2, zero)).status is RetractStatus.NOT_IDEMPOTENT
    assert verify_retraction(Endo(Poly.const(3), Poly.const(-1))).status is RetractStatus.CONSTANTS


def test_verify_retraction_checks_idempotency_directly():
    # the certificate's conclusion is cross-checked by brute composition
    rep = verify_retraction(Endo(p, zero))
    phi = rep.cert.retraction
    assert compose(phi, phi) == phi and apply(phi, p) == p


def test_not_idempotent_even_when_reducible():
    phi = Endo(x + y, zero)  # image Q[x + y] but phi(x + y) = x + y... twice
    assert compose(phi, phi) == phi
    assert verify_retraction(phi).ok
    psi = Endo(2 * x, zero)
    assert verify_retraction(psi).status is RetractStatus.NOT_IDEMPOTENT


def test_normalize_examples():
    res = normalize_retract(Endo(p, zero))
    assert res.psi.steps == () and res.q == x**2 and res.p_normal == p

    swapped = y + y**2 * x
    res = normalize_retract(Endo(zero, swapped))
    assert [s.kind for s in res.psi.steps] == ["linear"]
    assert res.psi.endo() == Endo(y, x)
    assert res.q == x**2 and res.p_normal == p

    res = normalize_retract(Endo(x, zero))
    assert res.psi.steps == () and res.q.is_zero() and res.p_normal == x


def test_normalize_rejects_non_retracts():
    with pytest.raises(NotARetract):
        normalize_retract(Endo(x**2, zero))


def _instance(seed, max_len=5, cb=3, db=2):
    rng = random.Random(seed)
    q = UniPoly(rng.randint(-cb, cb) for _ in range(rng.randint(0, 4) + 1)).to_poly(XY, "x")
    w = random_tame(seed, rng.randint(1, max_len), cb, db)
    return q, w


@pytest.mark.parametrize("seed", range(25))
def test_round_trip(seed):
    q, w = _instance(seed, max_len=3)
    pn = x + y * q
    psi, psinv = w.endo(), invert_tame(w).endo()
    target = apply(psinv, pn)
    phi = compose(psinv, compose(Endo(pn, zero), psi))
    rep = verify_retraction(phi)
    assert rep.ok
    h = subduce(rep.cert.generator, target)
    assert h is not None and h.degree == 1
    res = normalize_retract(phi)
    assert res.p_normal == x + y * res.q
    assert res.psi.apply(res.cert.generator) == res.p_normal
    assert res.cert.verify()


def test_cor12_examples():
    cert = cor12_retraction(p, Endo(x, zero))
    assert cert.retraction == Endo(p, zero) and cert.verify()
    cert = cor12_retraction(x, Endo.identity())
    assert cert.retraction == Endo(x, zero)
    with pytest.raises(PolyError, match="phi\\(p\\) != x"):
        cor12_retraction(p, Endo.identity())


def test_cor31_examples():
    res = cor31_retraction(p)
    assert res.status is Cor31Status.RETRACT and res.divisor == x**2 * y
    assert res.cert.retraction == Endo(p, zero)

    q = x + x**2 - y**2
    res = cor31_retraction(q)
    assert res.status is Cor31Status.RETRACT and res.c == 1
    assert res.cert.retraction == Endo(q, q)
    assert apply(res.cert.retraction, q) == q
    # brute-force check of the same identity
    assert oracles.substitute(as_dict(q), [as_dict(q), as_dict(q)], 2) == as_dict(q)

    res = cor31_retraction(x + x**2 + y**2)
    assert res.status is Cor31Status.EXTENSION_REQUIRED

    res = cor31_retraction(x + x**2 + y)
    assert res.status is Cor31Status.NO_HOMOGENEOUS_DIVISOR


def test_cor31_form_check():
    with pytest.raises(PolyError):
        cor31_retraction(2 * x + y**2)
    with pytest.raises(PolyError):
        cor31_retraction(x + y**2 + 1)


@given(st.integers(0, 10**6))
def test_cor31_certificates_fix_p(seed):
    rng = random.Random(seed)
    c = rng.choice([1, -1, 2, -3])
    lin = x - c * y if rng.random() < 0.5 else y
    g = lin * random_poly(rng, 4, 3)
    pp = x + g - g.coeff((1, 0)) * x - g.constant_value()
    if pp.coeff((1, 0)) != 1 or pp.constant_value():
        return
    res = cor31_retraction(pp)
    if res.status is Cor31Status.RETRACT:
        assert apply(res.cert.retraction, pp) == pp
        assert res.cert.verify()


def test_cor14_examples():
    r = cor14_lemmas(p)
    assert r.divisible_by_x and not r.y_axis_edge
    r = cor14_lemmas(y)
    assert not r.divisible_by_x and r.y_axis_edge and r.consistent_with_jacobian_mate
    r = cor14_lemmas(x)
    assert r.divisible_by_x and not r.y_axis_edge
