"""Retracts of Q[x, y]: membership in Q[p], generator recovery, certificates.

A retraction is an idempotent endomorphism; its image is ``Q``, all of
``Q[x, y]``, or ``Q[p]`` for a single generator ``p``.  The tools here
recover ``p`` from a retraction, certify it, and find a tame change of
coordinates taking ``p`` to the shape ``x + y*q``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Tuple

from .endo import Endo, TameStep, TameWord, apply, compose, invert_tame
from .newton import axis_edge
from .polycore import (
    DEFAULT_BUDGET,
    XY,
    Budget,
    BudgetExceeded,
    Poly,
    PolyError,
    UniPoly,
    _norm,
    homog_gcd,
)

_X, _Y = Poly.gens(XY)


class NotAMReducible(PolyError):
    """The degree-divisibility or leading-term cancellation step failed."""


def _check_cap(f: Poly, budget: Budget):
    if f.degree() > budget.degree_cap:
        raise BudgetExceeded(f"degree {f.degree()} exceeds cap {budget.degree_cap}")


class _Powers:
    def __init__(self, p: Poly, budget: Budget):
        self.p = p
        self.budget = budget
        self.cache = {0: Poly.one(p.vars), 1: p}

    def __getitem__(self, k: int) -> Poly:
        if k not in self.cache:
            if k * self.p.degree() > self.budget.degree_cap:
                raise BudgetExceeded(f"power {k} exceeds degree cap {self.budget.degree_cap}")
            half = self[k // 2]
            sq = half * half
            self.cache[k] = sq * self.p if k % 2 else sq
        return self.cache[k]


def _lt_power_ratio(f: Poly, g: Poly, k: int):
    """``c`` with ``lt(f) == c * lt(g)**k``, or ``None``."""
    ef, cf = f.leading_term()
    eg, cg = g.leading_term()
    if ef != tuple(k * a for a in eg):
        return None
    return _norm(Fraction(cf) / Fraction(cg) ** k)


def _signed_content(f: Poly) -> Fraction:
    """``s`` with ``f / s`` primitive integral with positive leading coefficient."""
    c = f.content()
    return -c if f.leading_term()[1] < 0 else c


def subduce(f: Poly, p: Poly, budget: Budget = DEFAULT_BUDGET) -> Optional[UniPoly]:
    """``h`` with ``h(p) == f``, or ``None`` when ``f`` is not in ``Q[p]``.

    Leading-term subduction under grlex decides membership because the
    leading term of ``p**k`` is the k-th power of the leading term of ``p``.
    The remainder is kept as an integer polynomial over a rational
    denominator so no coefficient arithmetic leaves the integers.
    """
    if f.vars != p.vars:
        raise PolyError("ring mismatch")
    if p.is_constant():
        raise PolyError("p must be non-constant")
    # work with the primitive integer form P = p / e, then rescale
    e = _signed_content(p)
    P = p.scale(1 / e)
    coeffs = {}
    powers = _Powers(P, budget)
    dp = P.degree()
    den = Fraction(1)
    rem = f
    if not rem.is_zero():
        den = 1 / rem.content()
        rem = rem.scale(den)
    steps = 0
    while not rem.is_constant():
        steps += 1
        if steps > budget.reduction_steps:
            raise BudgetExceeded("subduction step budget exceeded")
        df = rem.degree()
        if df % dp:
            return None
        k = df // dp
        er, n = rem.leading_term()
        if er != tuple(k * a for a in P.leading_term()[0]):
            return None
        m = P.leading_term()[1] ** k
        g = math.gcd(n, m)
        # true remainder rem/den loses (n / (den*m)) * P^k
        coeffs[k] = coeffs.get(k, 0) + Fraction(n, m) / den
        rem = rem.scale(m // g) - powers[k].scale(n // g)
        den = den * (m // g)
        if not rem.is_zero():
            cont = rem.content()
            if cont != 1:
                rem = rem.scale(1 / cont)
                den = den / cont
    coeffs[0] = coeffs.get(0, 0) + rem.constant_value() / den
    # verify in integers: L*f == sum (L*a_k) P^k over the cached powers
    lcm = 1
    for a in coeffs.values():
        d = Fraction(a).denominator
        lcm = lcm * d // math.gcd(lcm, d)
    check = f.scale(lcm)
    for k, a in coeffs.items():
        check = check - powers[k].scale(_norm(a * lcm))
    if not check.is_zero():
        raise AssertionError("subduction witness failed to verify")
    top = max(coeffs)
    return UniPoly(coeffs.get(i, 0) * e**-i for i in range(top + 1))


@dataclass(frozen=True)
class AMStep:
    """One move on a pair ``(f, g)``.

    ``translate_first``: ``f -= c``; ``translate_second``: ``g -= c``;
    ``reduce_first``: ``f -= c * g**k``; ``reduce_second``: ``g -= c * f**k``;
    ``scale_first``: ``f /= c``; ``scale_second``: ``g /= c``;
    ``swap``: exchange ``f`` and ``g``.
    """

    kind: str
    c: object = 0
    k: int = 0

    def to_json(self) -> dict:
        return {"kind": self.kind, "c": str(self.c), "k": self.k}


def replay(f: Poly, g: Poly, steps) -> Tuple[Poly, Poly]:
    for s in steps:
        if s.kind == "translate_first":
            f = f - s.c
        elif s.kind == "translate_second":
            g = g - s.c
        elif s.kind == "reduce_first":
            f = f - (g**s.k).scale(s.c)
        elif s.kind == "reduce_second":
            g = g - (f**s.k).scale(s.c)
        elif s.kind == "scale_first":
            f = f.scale(1 / Fraction(s.c))
        elif s.kind == "scale_second":
            g = g.scale(1 / Fraction(s.c))
        elif s.kind == "swap":
            f, g = g, f
        else:
            raise PolyError(f"unknown step {s.kind!r}")
    return f, g


@dataclass(frozen=True)
class AMResult:
    generator: Poly
    steps: Tuple[AMStep, ...]
    first_in_generator: UniPoly
    second_in_generator: UniPoly


def am_reduce(f: Poly, g: Poly, budget: Budget = DEFAULT_BUDGET) -> AMResult:
    """Euclid-like reduction of ``(f, g)`` to ``(h, 0)`` with ``Q[f, g] == Q[h]``.

    Constant terms are removed first.  While both are non-zero, the one of
    larger degree (``f`` on ties) loses its leading term by subtracting a
    scalar multiple of a power of the other; this needs one degree to divide
    the other and the leading terms to match, otherwise
    :class:`NotAMReducible` is raised.  Once reduction starts both entries
    are kept primitive integral, each rescaling logged as a ``scale_*``
    step, so the generator then comes out primitive.
    """
    if f.vars != XY or g.vars != XY:
        raise PolyError("am_reduce works over (x, y)")
    if f.is_constant() and g.is_constant():
        raise PolyError("both polynomials are constant; they generate only Q")
    f0, g0 = f, g
    steps = []
    if f.constant_value():
        steps.append(AMStep("translate_first", f.constant_value()))
        f = f - f.constant_value()
    if g.constant_value():
        steps.append(AMStep("translate_second", g.constant_value()))
        g = g - g.constant_value()

    def prim(u: Poly, which: str) -> Poly:
        if u.is_zero():
            return u
        s = _norm(_signed_content(u))
        if s == 1:
            return u
        steps.append(AMStep("scale_" + which, s))
        return u.scale(1 / Fraction(s))

    rounds = 0
    while f and g:
        if rounds == 0:
            f, g = prim(f, "first"), prim(g, "second")
        rounds += 1
        if rounds > budget.reduction_steps:
            raise BudgetExceeded("am_reduce step budget exceeded")
        if f.degree() >= g.degree():
            big, small, which = f, g, "first"
        else:
            big, small, which = g, f, "second"
        db, ds = big.degree(), small.degree()
        if db % ds:
            raise NotAMReducible(f"not an AM-reducible pair: degree {ds} does not divide {db}")
        k = db // ds
        if k * ds > budget.degree_cap:
            raise BudgetExceeded(f"degree {k * ds} exceeds cap {budget.degree_cap}")
        c = _lt_power_ratio(big, small, k)
        if c is None:
            raise NotAMReducible("not an AM-reducible pair: leading terms do not cancel")
        c = Fraction(c)
        steps.append(AMStep("reduce_" + which, _norm(c), k))
        # integral form of big - c * small^k, rescaled by c.denominator
        raw = big.scale(c.denominator) - (small**k).scale(c.numerator)
        if raw.is_zero():
            new = raw
        else:
            sc = _signed_content(raw)
            new = raw.scale(1 / sc)
            ratio = _norm(sc / c.denominator)
            if ratio != 1:
                steps.append(AMStep("scale_" + which, ratio))
        if which == "first":
            f = new
        else:
            g = new
    if not f:
        steps.append(AMStep("swap"))
        f, g = g, f
    h = f
    a = subduce(f0, h, budget)
    b = subduce(g0, h, budget)
    if a is None or b is None:
        raise AssertionError("reduced generator does not generate the input pair")
    return AMResult(h, tuple(steps), a, b)


class RetractStatus(enum.Enum):
    PROPER = "proper retract"
    WHOLE_RING = "image is all of K[x,y]"
    CONSTANTS = "image is K (constants only)"
    NOT_IDEMPOTENT = "not idempotent"
    NO_GENERATOR = "image generator not found"


@dataclass(frozen=True)
class RetractionCert:
    """A retraction with image ``Q[generator]``.

    ``normalizer`` (when set) is a tame word ``psi`` with
    ``psi(generator) == x + y * normal_form_q``.
    """

    retraction: Endo
    generator: Poly
    normalizer: Optional[TameWord] = None
    normal_form_q: Optional[Poly] = None
    am_steps: Tuple[AMStep, ...] = ()

    def verify(self, budget: Budget = DEFAULT_BUDGET) -> bool:
        """Re-check everything from the raw data.

        Both images are subduced against the generator, giving ``A, B`` with
        ``phi(x) = A(p)`` and ``phi(y) = B(p)``.  Then ``phi(p) = C(p)`` for
        ``C(t) = p(A(t), B(t))``, so ``phi`` fixes ``p`` iff ``C(t) = t``, and
        in that case ``phi(phi(x)) = A(phi(p)) = A(p) = phi(x)`` (same for
        ``y``): idempotency follows.
        """
        p = self.generator
        if p.is_constant():
            return False
        a = subduce(self.retraction.img_x, p, budget)
        b = subduce(self.retraction.img_y, p, budget)
        if a is None or b is None:
            return False
        if _fixed_shadow(p, a, b, budget) != UniPoly.t():
            return False
        if self.normalizer is not None:
            target = _X + _Y * self.normal_form_q
            if self.normalizer.apply(p, budget) != target:
                return False
        return True


def _fixed_shadow(p: Poly, a: UniPoly, b: UniPoly, budget: Budget) -> UniPoly:
    """``C(t) = p(A(t), B(t))``."""
    t_ring = ("x",)
    c = p.substitute((a.to_poly(t_ring), b.to_poly(t_ring)), degree_cap=budget.degree_cap)
    return UniPoly(c.coeff((k,)) for k in range(int(max(c.degree(), 0)) + 1))


@dataclass(frozen=True)
class RetractionReport:
    status: RetractStatus
    cert: Optional[RetractionCert] = None
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status is RetractStatus.PROPER


def verify_retraction(phi: Endo, budget: Budget = DEFAULT_BUDGET) -> RetractionReport:
    """Classify ``phi`` and, for a proper retraction, certify its generator."""
    if phi.is_identity():
        return RetractionReport(RetractStatus.WHOLE_RING)
    if phi.img_x.is_constant() and phi.img_y.is_constant():
        return RetractionReport(RetractStatus.CONSTANTS)
    try:
        am = am_reduce(phi.img_x, phi.img_y, budget)
    except NotAMReducible as exc:
        if compose(phi, phi, budget) != phi:
            return RetractionReport(RetractStatus.NOT_IDEMPOTENT)
        return RetractionReport(RetractStatus.NO_GENERATOR, detail=str(exc))
    p = am.generator
    if _fixed_shadow(p, am.first_in_generator, am.second_in_generator, budget) != UniPoly.t():
        return RetractionReport(RetractStatus.NOT_IDEMPOTENT)
    cert = RetractionCert(phi, p, am_steps=am.steps)
    if not cert.verify(budget):
        raise AssertionError("retraction certificate failed to verify")
    return RetractionReport(RetractStatus.PROPER, cert)


class NotARetract(PolyError):
    def __init__(self, report: RetractionReport):
        super().__init__(report.status.value + (f": {report.detail}" if report.detail else ""))
        self.report = report


def _steps_to_word(steps) -> TameWord:
    # each move on the image pair is a coordinate change X <- X - c*Y^k etc.
    word = []
    for s in steps:
        if s.kind == "translate_first":
            word.append(TameStep.linear(((1, 0), (0, 1)), (-s.c, 0)))
        elif s.kind == "translate_second":
            word.append(TameStep.linear(((1, 0), (0, 1)), (0, -s.c)))
        elif s.kind == "reduce_first":
            word.append(TameStep.shear_x(UniPoly([0] * s.k + [-s.c])))
        elif s.kind == "reduce_second":
            word.append(TameStep.shear_y(UniPoly([0] * s.k + [-s.c])))
        elif s.kind == "scale_first":
            word.append(TameStep.linear(((Fraction(1) / s.c, 0), (0, 1))))
        elif s.kind == "scale_second":
            word.append(TameStep.linear(((1, 0), (0, Fraction(1) / s.c))))
        elif s.kind == "swap":
            word.append(TameStep.swap())
    return TameWord(tuple(word))


@dataclass(frozen=True)
class NormalizedRetract:
    psi: TameWord
    q: Poly
    p_normal: Poly
    cert: RetractionCert


def normalize_retract(phi: Endo, budget: Budget = DEFAULT_BUDGET) -> NormalizedRetract:
    """Tame ``psi`` taking the generator ``p`` of ``phi``'s image to ``x + y*q``.

    The reduction log of the image pair is read as a sequence of coordinate
    changes ``sigma`` with ``phi(sigma(x)) = p`` and ``phi(sigma(y)) = 0``;
    then ``psi = sigma^-1`` sends ``p`` to a polynomial ``r`` with
    ``r(x, 0) = x``.  A final affine step fixes any leftover scaling.  The
    outcome is checked directly, not trusted.
    """
    report = verify_retraction(phi, budget)
    if not report.ok:
        raise NotARetract(report)
    cert = report.cert
    p = cert.generator
    word = invert_tame(_steps_to_word(cert.am_steps))
    p_normal = word.apply(p, budget)
    restr = p_normal.substitute((_X, Poly.zero(XY)))
    if restr != _X:
        if restr.degree() != 1 or restr.coeff((0, 1)):
            raise PolyError("normalization failed: image restricted to y = 0 is not linear in x")
        a, b = restr.coeff((1, 0)), restr.constant_value()
        inv_a = Fraction(1) / Fraction(a)
        fix = TameStep.linear(((inv_a, 0), (0, 1)), (-b * inv_a, 0))
        word = TameWord((fix,)) + word
        p_normal = word.apply(p, budget)
    q = (p_normal - _X).div_exact(_Y)
    if q is None or p_normal != _X + _Y * q:
        raise PolyError("normalization failed: result is not of the form x + y*q")
    canon = Endo(p_normal, Poly.zero(XY))
    if apply(canon, p_normal, budget) != p_normal:
        raise AssertionError("canonical retraction does not fix the normal form")
    full = RetractionCert(phi, p, word, q, cert.am_steps)
    if not full.verify(budget):
        raise AssertionError("normalized certificate failed to verify")
    return NormalizedRetract(word, q, p_normal, full)


def cor12_retraction(p: Poly, phi: Endo, budget: Budget = DEFAULT_BUDGET) -> RetractionCert:
    """Retraction onto ``Q[p]`` from a map ``phi`` with ``phi(p) == x``.

    With ``psi = (x -> p, y -> 0)`` the map ``rho = psi o phi`` fixes ``p``
    and has image ``Q[p]``.
    """
    if apply(phi, p, budget) != _X:
        raise PolyError("precondition failed: phi(p) != x")
    psi = Endo(p, Poly.zero(XY))
    rho = compose(psi, phi, budget)
    cert = RetractionCert(rho, p)
    if apply(rho, p, budget) != p or not cert.verify(budget):
        raise AssertionError("retraction certificate failed to verify")
    return cert


class Cor31Status(enum.Enum):
    RETRACT = "retract"
    NO_HOMOGENEOUS_DIVISOR = "no homogeneous divisor"
    EXTENSION_REQUIRED = "no rational root - extension required"
    X_POWER_DIVISOR = "homogeneous divisor is a power of x"


@dataclass(frozen=True)
class Cor31Result:
    status: Cor31Status
    divisor: Optional[Poly] = None
    c: Optional[Fraction] = None
    cert: Optional[RetractionCert] = None


def cor31_retraction(p: Poly, budget: Budget = DEFAULT_BUDGET) -> Cor31Result:
    """Retraction onto ``Q[p]`` for ``p = x + g`` with ``g`` having a homogeneous factor.

    With ``h`` the largest homogeneous divisor of ``g``: if ``y | h`` the map
    ``(x -> p, y -> 0)`` works; otherwise a rational root ``c`` of ``h(1, t)``
    gives ``(x -> p, y -> c*p)``, which kills ``h`` and hence ``g``.
    """
    if p.vars != XY or p.constant_value() or p.coeff((1, 0)) != 1:
        raise PolyError("p must have the form x + g with zero constant term and x-coefficient 1")
    g = p - _X
    zero = Poly.zero(XY)
    if g.is_zero():
        cert = RetractionCert(Endo(p, zero), p)
        return Cor31Result(Cor31Status.RETRACT, None, None, cert)
    h = homog_gcd(g)
    if h.is_constant():
        return Cor31Result(Cor31Status.NO_HOMOGENEOUS_DIVISOR, h)
    if h.div_exact(_Y) is not None:
        phi = Endo(p, zero)
        c = None
    else:
        d = int(h.degree())
        dehom = UniPoly(h.coeff((d - j, j)) for j in range(d + 1))
        if dehom.degree == 0:
            return Cor31Result(Cor31Status.X_POWER_DIVISOR, h)
        roots = [r for r in dehom.rational_roots() if r]
        if not roots:
            return Cor31Result(Cor31Status.EXTENSION_REQUIRED, h)
        c = roots[0]
        phi = Endo(p, p.scale(c))
    if apply(phi, p, budget) != p:
        raise AssertionError("constructed map does not fix p")
    cert = RetractionCert(phi, p)
    if not cert.verify(budget):
        raise AssertionError("retraction certificate failed to verify")
    return Cor31Result(Cor31Status.RETRACT, h, c, cert)


@dataclass(frozen=True)
class Cor14Report:
    divisible_by_x: bool
    y_axis_edge: bool
    consistent_with_jacobian_mate: bool


def cor14_lemmas(p: Poly) -> Cor14Report:
    """x-divisibility and y-axis edge of ``p``.

    A polynomial divisible by ``x`` has no Newton polygon edge on the y-axis,
    and a polynomial with a Jacobian mate needs one.
    """
    if p.is_zero():
        raise PolyError("p must be non-zero")
    div_x = all(e[0] >= 1 for e in p.terms)
    edge = axis_edge(p, "y")
    return Cor14Report(div_x, edge, edge)
