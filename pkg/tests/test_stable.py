import random

import oracles
import pytest
from hypothesis import given
from hypothesis import strategies as st

from polyretract import TameStep, TameWord, UniPoly, compose
from polyretract import Budget, Endo, Poly, PolyError, apply, cor17_consistency, degree_trace, fixed_polys, invert_tame, random_tame
from polyretract.stable import Cor17Status, bareiss_echelon, monomials_upto, nullspace

x, y = Poly.gens()


def test_trace_examples():
    assert degree_trace(Endo(x**2, y**2), 3).records == ((2, 2), (4, 4), (8, 8))
    assert degree_trace(Endo(x + y**2, y), 3).records == ((2, 1), (2, 1), (2, 1))
    assert degree_trace(Endo.identity(), 2).records == ((1, 1), (1, 1))
    with pytest.raises(PolyError):
        degree_trace(Endo.identity(), 0)


def test_trace_truncates_at_cap():
    tr = degree_trace(Endo(x**2, y**3), 10, Budget(degree_cap=100))
    assert tr.truncated
    assert tr.records == ((2, 3), (4, 9), (8, 27), (16, 81))
    assert tr.to_json()[0] == [1, 2, 3]


def test_trace_of_conjugated_shear_is_eventually_constant():
    w = TameWord((TameStep.shear_y(UniPoly([0, 1, 1])), TameStep.linear(((1, 1), (0, 1)), (1, 0))))
    conj = compose(compose(w.endo(), Endo(x + y**2, y)), invert_tame(w).endo())
    recs = degree_trace(conj, 6).records
    assert len(set(recs)) == 1


def test_fixed_examples():
    fs = fixed_polys(Endo(x + y**2, y), 1)
    assert set(fs.basis) == {Poly.one(), y}
    assert fixed_polys(Endo.identity(), 2).dimension == 6
    assert fixed_polys(Endo(x**2, y**2), 1).basis == (Poly.one(),)


@pytest.mark.parametrize("d", range(5))
def test_identity_dimension(d):
    assert fixed_polys(Endo.identity(), d).dimension == (d + 1) * (d + 2) // 2


@given(st.integers(0, 10**6))
def test_fixed_basis_elements_are_fixed(seed):
    rng = random.Random(seed)
    if rng.random() < 0.5:
        phi = random_tame(seed, 2, 2, 2).endo()
    else:
        phi = Endo(
            Poly({(rng.randint(0, 2), rng.randint(0, 2)): rng.randint(-2, 2) for _ in range(3)}),
            Poly({(rng.randint(0, 2), rng.randint(0, 2)): rng.randint(-2, 2) for _ in range(3)}),
        )
    fs = fixed_polys(phi, 2)
    assert Poly.one() in fs.basis
    for f in fs.basis:
        assert apply(phi, f) == f
    # linear independence via an independent rank computation
    monos = monomials_upto(2)
    rows = [[f.coeff(m) for m in monos] for f in fs.basis]
    assert oracles.rank(rows) == len(rows)


def test_fixed_dimension_matches_oracle_rank():
    rng = random.Random(21)
    for _ in range(20):
        phi = random_tame(rng.randint(0, 10**6), 2, 2, 1).endo()
        d = 2
        monos = monomials_upto(d)
        imgs = [apply(phi, Poly.monomial(m)) - Poly.monomial(m) for m in monos]
        support = sorted({e for im in imgs for e in im.terms})
        matrix = [[im.coeff(e) for im in imgs] for e in support]
        want = len(monos) - (oracles.rank(matrix) if matrix else 0)
        assert fixed_polys(phi, d).dimension == want


def test_bareiss_and_nullspace():
    rows = [[2, 4, -2], [1, 2, 3], [3, 6, 1]]
    ech, piv = bareiss_echelon(rows)
    assert piv == [0, 2]
    basis = nullspace(rows, 3)
    assert len(basis) == 1
    v = basis[0]
    assert all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)


def test_cor17_examples():
    rep = cor17_consistency(Endo(x + y**2, y), 2)
    assert rep.status is Cor17Status.CONSISTENT
    assert rep.fixed is not None and not rep.fixed.is_constant()
    assert cor17_consistency(Endo(x**2, y**2), 2).status is Cor17Status.NOT_KELLER


def test_cor17_no_fixed_on_some_tame_word():
    found = False
    for seed in range(60):
        rep = cor17_consistency(random_tame(seed, 4, 3, 2).endo(), 2)
        assert rep.status is not Cor17Status.VIOLATION
        found = found or rep.status is Cor17Status.NO_FIXED
    assert found
