import random

import oracles
import pytest
from conftest import as_dict, random_poly
from hypothesis import given
from hypothesis import strategies as st

from polyretract import (
    BudgetExceeded,
    Budget,
    Endo,
    Poly,
    PolyError,
    TameStep,
    TameWord,
    UniPoly,
    apply,
    compose,
    invert_tame,
    is_automorphism,
    iterate,
    random_tame,
)

x, y = Poly.gens()
zero = Poly.zero()
p = x + x**2 * y
ident = Endo.identity()


def test_apply_examples():
    assert apply(Endo(p, zero), p) == p
    assert apply(ident, p) == p
    assert apply(Endo(y, x), p) == y + y**2 * x


def test_compose_identity():
    phi = Endo(x**2 + y, x * y)
    assert compose(phi, ident) == phi
    assert compose(ident, phi) == phi


def test_compose_rho_equals_psi_after_phi():
    # psi sends x to p and kills y; phi kills y; rho = psi phi
    psi = Endo(p, zero)
    phi = Endo(x, zero)
    rho = compose(psi, phi)
    assert rho == Endo(p, zero)
    assert apply(rho, p) == p


def test_shear_and_swap_do_not_commute():
    shear = Endo(x + y**2, y)
    swap = Endo(y, x)
    assert compose(shear, swap).img_x == y
    assert compose(swap, shear).img_x == y + x**2


def test_compose_against_oracle():
    rng = random.Random(4)
    for _ in range(30):
        phi = Endo(random_poly(rng, 4, 2), random_poly(rng, 4, 2))
        psi = Endo(random_poly(rng, 4, 2), random_poly(rng, 4, 2))
        c = compose(phi, psi)
        phis = [as_dict(phi.img_x), as_dict(phi.img_y)]
        assert as_dict(c.img_x) == oracles.substitute(as_dict(psi.img_x), phis, 2)
        assert as_dict(c.img_y) == oracles.substitute(as_dict(psi.img_y), phis, 2)


@given(st.integers(0, 10**6))
def test_composition_order_property(seed):
    rng = random.Random(seed)
    phi = Endo(random_poly(rng, 4, 2), random_poly(rng, 4, 2))
    psi = Endo(random_poly(rng, 4, 2), random_poly(rng, 4, 2))
    f = random_poly(rng, 5, 3)
    assert apply(compose(phi, psi), f) == apply(phi, apply(psi, f))


def test_invert_examples():
    w = TameWord((TameStep.shear_x(UniPoly([0, 0, 1])),))
    inv = invert_tame(w)
    assert inv.endo() == Endo(x - y**2, y)
    assert invert_tame(TameWord()).steps == ()
    assert TameWord().endo().is_identity()


def test_invert_three_step_word():
    w = TameWord(
        (
            TameStep.shear_x(UniPoly([1, 0, 2])),
            TameStep.linear(((2, 1), (1, 1)), (3, -1)),
            TameStep.shear_y(UniPoly([0, -1, 0, 1])),
        )
    )
    inv = invert_tame(w)
    assert [s.kind for s in inv.steps] == ["elementary_y", "linear", "elementary_x"]
    assert compose(w.endo(), inv.endo()).is_identity()
    assert compose(inv.endo(), w.endo()).is_identity()


@given(st.integers(0, 10**6), st.integers(0, 5))
def test_inverse_property(seed, length):
    w = random_tame(seed, length, 3, 2)
    e, i = w.endo(), invert_tame(w).endo()
    assert compose(e, i).is_identity() and compose(i, e).is_identity()


@given(st.integers(0, 10**6))
def test_word_apply_matches_endo(seed):
    w = random_tame(seed, 4, 3, 2)
    f = random_poly(random.Random(seed), 5, 3)
    assert w.apply(f) == apply(w.endo(), f)


def test_iterate_examples():
    assert iterate(Endo(x**2, y**2), 3) == Endo(x**8, y**8)
    assert iterate(Endo(x + y**2, y), 2) == Endo(x + 2 * y**2, y)
    phi = Endo(x + x * y, y - 1)
    assert iterate(phi, 1) == phi
    with pytest.raises(PolyError):
        iterate(phi, 0)


@given(st.integers(1, 4), st.integers(1, 4))
def test_iterate_additive(a, b):
    phi = Endo(x + y**2, 2 * y + 1)
    assert iterate(phi, a + b) == compose(iterate(phi, a), iterate(phi, b))


def test_iterate_budget():
    with pytest.raises(BudgetExceeded):
        iterate(Endo(x**2, y**2), 12, Budget(degree_cap=512))


def test_random_tame_determinism():
    assert random_tame(17, 4, 3, 2) == random_tame(17, 4, 3, 2)
    assert random_tame(17, 4, 3, 2) != random_tame(18, 4, 3, 2)
    assert random_tame(3, 0, 3, 2).endo().is_identity()


def test_random_tame_bounds():
    for seed in range(50):
        for s in random_tame(seed, 5, 3, 2).steps:
            if s.kind == "linear":
                assert abs(s.det()) == 1
                assert all(abs(c) <= 3 for row in s.matrix for c in row)
                assert all(abs(c) <= 3 for c in s.translation)
            else:
                assert s.payload.degree <= 2
                assert all(abs(c) <= 3 for c in s.payload.coeffs)


def test_random_words_are_automorphisms():
    for seed in range(100):
        ok, inv = is_automorphism(random_tame(seed, 3, 3, 2).endo())
        assert ok and inv is not None


def test_word_json_round_trip():
    w = random_tame(9, 5, 3, 2)
    assert TameWord.from_json(w.to_json()) == w


def test_singular_linear_step_rejected():
    with pytest.raises(PolyError):
        TameStep.linear(((1, 2), (2, 4)))
