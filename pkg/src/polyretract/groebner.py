"""Buchberger's algorithm over Q with optional cofactor tracking.

Polynomials are handled internally as plain ``{exps: coeff}`` dicts.  Every
new basis element is cleared to a primitive integer polynomial, which keeps
coefficients small without changing the ideal.  When cofactors are tracked,
each basis element carries the list of polynomials expressing it in terms of
the original generators, so membership certificates come straight out of the
computation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .endo import Endo, compose
from .polycore import (
    DEFAULT_BUDGET,
    XY,
    XYPQ,
    Budget,
    BudgetExceeded,
    Poly,
    PolyError,
    _norm,
)

Dict_ = Dict[Tuple[int, ...], object]


@dataclass(frozen=True)
class MonomialOrder:
    """``kind`` is ``lex``, ``grlex`` or ``block_elimination``.

    ``priority`` lists variable positions from most to least significant
    (defaults to the ring order).  For ``block_elimination`` the first
    ``block`` variables of the priority list form the eliminated block; each
    block is compared by grlex.
    """

    kind: str = "grlex"
    priority: Optional[Tuple[int, ...]] = None
    block: int = 2

    def __post_init__(self):
        if self.kind not in ("lex", "grlex", "block_elimination"):
            raise PolyError(f"unknown monomial order {self.kind!r}")

    def key(self, nvars: int):
        perm = self.priority or tuple(range(nvars))
        if sorted(perm) != list(range(nvars)):
            raise PolyError("priority must be a permutation of the variables")
        if self.kind == "lex":
            return lambda e: tuple(e[i] for i in perm)
        if self.kind == "grlex":
            return lambda e: (sum(e), tuple(e[i] for i in perm))
        head, tail = perm[: self.block], perm[self.block :]

        def block_key(e):
            a = tuple(e[i] for i in head)
            b = tuple(e[i] for i in tail)
            return (sum(a), a, sum(b), b)

        return block_key


GRLEX = MonomialOrder("grlex")
LEX = MonomialOrder("lex")
ELIM_XY = MonomialOrder("block_elimination", block=2)


@dataclass(frozen=True)
class UnimodCert:
    """``p_x * u + p_y * v == 1``."""

    p: Poly
    u: Poly
    v: Poly

    def verify(self) -> bool:
        return self.p.partial("x") * self.u + self.p.partial("y") * self.v == 1


@dataclass(frozen=True)
class MembershipCert:
    """``expression(P=p, Q=q) == member``; ``expression`` lives over ``(P, Q)``."""

    member: Poly
    p: Poly
    q: Poly
    expression: Poly

    def verify(self) -> bool:
        return self.expression.substitute((self.p, self.q)) == self.member


class _Counter:
    def __init__(self, limit: int):
        self.limit = limit
        self.n = 0

    def tick(self):
        self.n += 1
        if self.n > self.limit:
            raise BudgetExceeded(f"more than {self.limit} reduction steps")


def _divides(a, b) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _sub_scaled(p: dict, g: dict, mono, c):
    """In place ``p -= c * mono * g``."""
    for e, v in g.items():
        k = tuple(a + b for a, b in zip(e, mono))
        w = p.get(k, 0) - c * v
        if w:
            p[k] = _norm(w)
        else:
            p.pop(k, None)


def _add_scaled(p: dict, g: dict, mono, c):
    _sub_scaled(p, g, mono, -c)


def _mul_dicts(a: dict, b: dict) -> dict:
    out: dict = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            k = tuple(u + v for u, v in zip(e1, e2))
            out[k] = out.get(k, 0) + c1 * c2
    return {e: _norm(c) for e, c in out.items() if c}


def _primitive(p: dict) -> Fraction:
    """Factor ``c`` with ``p / c`` primitive integral, positive leading sign ignored."""
    num = 0
    den = 1
    for v in p.values():
        v = Fraction(v)
        num = math.gcd(num, v.numerator)
        den = den * v.denominator // math.gcd(den, v.denominator)
    return Fraction(num, den)


def _scale(p: dict, c) -> dict:
    return {e: _norm(v * c) for e, v in p.items()}


class _Basis:
    """Working state of one Groebner computation."""

    def __init__(self, nvars, nin, key, track, counter):
        self.n = nvars
        self.nin = nin
        self.key = key
        self.track = track
        self.counter = counter
        self.polys: List[dict] = []
        self.lms: List[tuple] = []
        self.lcs: List[object] = []
        self.cof: List[List[dict]] = []
        self.alive: List[bool] = []

    def reduce(self, f: dict, quot: Optional[Dict[int, dict]] = None, full: bool = True, skip=-1):
        """Normal form of ``f``; accumulates quotients into ``quot`` when given."""
        p = dict(f)
        r: dict = {}
        key = self.key
        zero = (0,) * self.n
        while p:
            e = max(p, key=key)
            c = p[e]
            for i, lm in enumerate(self.lms):
                if i != skip and self.alive[i] and _divides(lm, e):
                    self.counter.tick()
                    mono = tuple(a - b for a, b in zip(e, lm))
                    q = _norm(Fraction(c) / self.lcs[i])
                    _sub_scaled(p, self.polys[i], mono, q)
                    if quot is not None:
                        d = quot.setdefault(i, {})
                        w = d.get(mono, 0) + q
                        if w:
                            d[mono] = _norm(w)
                        else:
                            d.pop(mono, None)
                    break
            else:
                if not full:
                    r.update(p)
                    return r
                r[e] = c
                del p[e]
        return r

    def cofactors_of(self, base: Optional[List[dict]], quot: Dict[int, dict]) -> List[dict]:
        """Cofactors of ``f - sum quot_i g_i`` given cofactors ``base`` of ``f``."""
        out = [dict(b) for b in base] if base is not None else [{} for _ in range(self.nin)]
        for i, q in quot.items():
            if not q:
                continue
            for j, cij in enumerate(self.cof[i]):
                if cij:
                    prod = _mul_dicts(q, cij)
                    for e, v in prod.items():
                        w = out[j].get(e, 0) - v
                        if w:
                            out[j][e] = _norm(w)
                        else:
                            out[j].pop(e, None)
        return out

    def add(self, f: dict, cof: Optional[List[dict]]) -> int:
        c = _primitive(f)
        lm = max(f, key=self.key)
        if f[lm] < 0:
            c = -c
        f = _scale(f, 1 / c)
        self.polys.append(f)
        self.lms.append(lm)
        self.lcs.append(f[lm])
        self.alive.append(True)
        if self.track:
            self.cof.append([_scale(x, 1 / c) for x in cof])
        return len(self.polys) - 1


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _compute(gens: Sequence[Poly], order: MonomialOrder, strategy: str, budget: Budget, track: bool):
    if not gens:
        raise PolyError("need at least one generator")
    ring = gens[0].vars
    for g in gens:
        if g.vars != ring:
            raise PolyError("generators must share one ring")
    n = len(ring)
    key = order.key(n)
    counter = _Counter(budget.reduction_steps)
    B = _Basis(n, len(gens), key, track, counter)
    zero = (0,) * n

    for j, g in enumerate(gens):
        if g.is_zero():
            continue
        cof = None
        if track:
            cof = [{} for _ in gens]
            cof[j] = {zero: 1}
        B.add(dict(g.terms), cof)

    unit = next((i for i, lm in enumerate(B.lms) if lm == zero), None)
    pairs: List[Tuple[int, int]] = [(i, j) for j in range(len(B.polys)) for i in range(j)]
    done = set()

    while pairs and unit is None:
        if strategy == "normal":
            idx = min(range(len(pairs)), key=lambda t: (key(_lcm(B.lms[pairs[t][0]], B.lms[pairs[t][1]])), pairs[t]))
        elif strategy == "fifo":
            idx = 0
        else:
            raise PolyError(f"unknown selection strategy {strategy!r}")
        i, j = pairs.pop(idx)
        done.add((i, j))
        li, lj = B.lms[i], B.lms[j]
        L = _lcm(li, lj)
        if all(a == 0 or b == 0 for a, b in zip(li, lj)):
            continue
        pending = set(pairs)
        chain = False
        for k in range(len(B.polys)):
            if k in (i, j) or not _divides(B.lms[k], L):
                continue
            if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
                chain = True
                break
        if chain:
            continue

        mi = tuple(a - b for a, b in zip(L, li))
        mj = tuple(a - b for a, b in zip(L, lj))
        ci, cj = B.lcs[i], B.lcs[j]
        s: dict = {}
        _add_scaled(s, B.polys[i], mi, cj)
        _sub_scaled(s, B.polys[j], mj, ci)
        quot = {} if track else None
        r = B.reduce(s, quot)
        if not r:
            continue
        cof = None
        if track:
            base = [{} for _ in gens]
            for t, cit in enumerate(B.cof[i]):
                _add_scaled(base[t], cit, mi, cj)
            for t, cjt in enumerate(B.cof[j]):
                _sub_scaled(base[t], cjt, mj, ci)
            cof = B.cofactors_of(base, quot)
        new = B.add(r, cof)
        if len(B.polys) > budget.basis_cap:
            raise BudgetExceeded(f"basis grew beyond {budget.basis_cap} polynomials")
        if B.lms[new] == zero:
            unit = new
            break
        pairs.extend((k, new) for k in range(new))

    if unit is not None:
        keep = [unit]
    else:
        # minimal basis: drop elements whose leading monomial is divisible by another's
        keep = []
        for i, lm in enumerate(B.lms):
            redundant = False
            for j, lm2 in enumerate(B.lms):
                if j == i or not _divides(lm2, lm):
                    continue
                if lm2 != lm or j < i:
                    redundant = True
                    break
            if not redundant:
                keep.append(i)
    for i in range(len(B.polys)):
        B.alive[i] = i in keep

    result = []
    for i in keep:
        quot = {} if track else None
        tail = dict(B.polys[i])
        lm = B.lms[i]
        lead = tail.pop(lm)
        r = B.reduce(tail, quot, skip=i)
        r[lm] = lead
        inv = Fraction(1) / Fraction(lead)
        poly = Poly(_scale(r, inv), ring)
        cof = None
        if track:
            cof = [Poly(_scale(c, inv), ring) for c in B.cofactors_of(B.cof[i], quot)]
        result.append((key(lm), poly, cof))
    result.sort(key=lambda t: t[0])
    return B, result


def buchberger(
    gens: Sequence[Poly],
    order: MonomialOrder = GRLEX,
    strategy: str = "normal",
    budget: Budget = DEFAULT_BUDGET,
) -> List[Poly]:
    """Reduced Groebner basis, sorted by increasing leading monomial.

    ``strategy`` picks the next S-pair: ``"normal"`` takes the pair with the
    smallest lcm, ``"fifo"`` the oldest pair.  The output does not depend on it.
    """
    _, res = _compute(gens, order, strategy, budget, track=False)
    return [p for _, p, _ in res]


def groebner_with_cofactors(gens, order=GRLEX, strategy="normal", budget=DEFAULT_BUDGET):
    """Reduced basis plus, for each element, its cofactors over ``gens``."""
    _, res = _compute(gens, order, strategy, budget, track=True)
    return [p for _, p, _ in res], [c for _, _, c in res]


def normal_form(f: Poly, basis: Sequence[Poly], order: MonomialOrder = GRLEX, budget=DEFAULT_BUDGET) -> Poly:
    n = f.nvars
    B = _Basis(n, 0, order.key(n), False, _Counter(budget.reduction_steps))
    for g in basis:
        if g.vars != f.vars:
            raise PolyError("ring mismatch")
        if not g.is_zero():
            B.add(dict(g.terms), None)
    return Poly(B.reduce(dict(f.terms)), f.vars)


def ideal_member(f: Poly, gens: Sequence[Poly], order: MonomialOrder = GRLEX, budget=DEFAULT_BUDGET):
    """Cofactors ``c`` with ``sum(c[i] * gens[i]) == f``, or ``None`` if ``f`` is not in the ideal."""
    gens = list(gens)
    if any(g.vars != f.vars for g in gens):
        raise PolyError("ring mismatch")
    basis, cofs = groebner_with_cofactors(gens, order, budget=budget)
    n = f.nvars
    key = order.key(n)
    W = _Basis(n, len(gens), key, True, _Counter(budget.reduction_steps))
    for g, c in zip(basis, cofs):
        W.polys.append(dict(g.terms))
        lm = max(g.terms, key=key)
        W.lms.append(lm)
        W.lcs.append(g.terms[lm])
        W.alive.append(True)
        W.cof.append([dict(x.terms) for x in c])
    quot: Dict[int, dict] = {}
    r = W.reduce(dict(f.terms), quot)
    if r:
        return None
    # f = sum quot_i g_i, so the cofactors are minus those of (0 - sum quot_i g_i)
    neg = W.cofactors_of(None, quot)
    out = [-Poly(c, f.vars) for c in neg]
    total = Poly.zero(f.vars)
    for c, g in zip(out, gens):
        total = total + c * g
    if total != f:
        raise AssertionError("ideal membership certificate failed to verify")
    return out


def unimodular_cert(p: Poly, budget: Budget = DEFAULT_BUDGET) -> Optional[UnimodCert]:
    """Witness ``(u, v)`` that the gradient of ``p`` is unimodular over Q, else ``None``."""
    if p.vars != XY:
        raise PolyError("unimodular_cert works over (x, y)")
    if p.is_constant():
        raise PolyError("p must be non-constant")
    cof = ideal_member(Poly.one(XY), [p.partial("x"), p.partial("y")], budget=budget)
    if cof is None:
        return None
    cert = UnimodCert(p, cof[0], cof[1])
    if not cert.verify():
        raise AssertionError("unimodular certificate failed to verify")
    return cert


def _tag_basis(p: Poly, q: Poly, budget: Budget):
    X, Y, P, Q = Poly.gens(XYPQ)
    gens = [P - p.to_ring(XYPQ), Q - q.to_ring(XYPQ)]
    return buchberger(gens, ELIM_XY, budget=budget)


def _tag_member(f: Poly, p: Poly, q: Poly, basis, budget) -> Optional[MembershipCert]:
    nf = normal_form(f.to_ring(XYPQ), basis, ELIM_XY, budget)
    if nf.involves("x") or nf.involves("y"):
        return None
    cert = MembershipCert(f, p, q, nf.to_ring(("P", "Q")))
    if not cert.verify():
        raise AssertionError("subalgebra membership certificate failed to verify")
    return cert


def subalg_member(f: Poly, p: Poly, q: Poly, budget: Budget = DEFAULT_BUDGET) -> Optional[MembershipCert]:
    """Express ``f`` as a polynomial in ``p`` and ``q``, or ``None`` if impossible.

    Uses tag variables: reduce ``f`` modulo a basis of ``<P - p, Q - q>``
    under an order eliminating ``x, y``; ``f`` lies in ``Q[p, q]`` exactly when
    the normal form involves only ``P`` and ``Q``.
    """
    for g in (f, p, q):
        if g.vars != XY:
            raise PolyError("subalg_member works over (x, y)")
    return _tag_member(f, p, q, _tag_basis(p, q, budget), budget)


def is_automorphism(phi: Endo, budget: Budget = DEFAULT_BUDGET) -> Tuple[bool, Optional[Endo]]:
    """``(True, inverse)`` if ``phi`` is an automorphism, else ``(False, None)``."""
    p, q = phi.images()
    basis = _tag_basis(p, q, budget)
    X, Y = Poly.gens(XY)
    mx = _tag_member(X, p, q, basis, budget)
    if mx is None:
        return False, None
    my = _tag_member(Y, p, q, basis, budget)
    if my is None:
        return False, None
    rename = ("x", "y")
    inv = Endo(Poly(dict(mx.expression.terms), rename), Poly(dict(my.expression.terms), rename))
    if not compose(phi, inv, budget).is_identity() or not compose(inv, phi, budget).is_identity():
        raise AssertionError("inverse failed to verify")
    return True, inv
