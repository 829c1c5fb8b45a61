import random
import sys

from hypothesis import settings
from hypothesis import strategies as st

from polyretract import XY, Poly

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def exps(n, max_deg):
    return st.tuples(*[st.integers(0, max_deg)] * n)


def polys(vars=XY, max_terms=12, max_deg=5, coeff=9, rational=False):
    c = st.integers(-coeff, coeff)
    if rational:
        c = st.one_of(c, st.fractions(min_value=-coeff, max_value=coeff, max_denominator=6))
    return st.dictionaries(exps(len(vars), max_deg), c, max_size=max_terms).map(lambda d: Poly(d, vars))


def random_poly(rng: random.Random, max_terms=12, max_deg=5, coeff=9, vars=XY, rational=False) -> Poly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        e = tuple(rng.randint(0, max_deg) for _ in vars)
        if rational and rng.random() < 0.3:
            from fractions import Fraction

            terms[e] = Fraction(rng.randint(-coeff, coeff), rng.randint(1, 6))
        else:
            terms[e] = rng.randint(-coeff, coeff)
    return Poly(terms, vars)


def as_dict(f: Poly) -> dict:
    return dict(f.terms)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.summary_line(n))
