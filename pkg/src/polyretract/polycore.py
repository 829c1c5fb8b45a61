"""Exact sparse polynomials over Q in up to four variables.

A :class:`Poly` lives in a ring named by a tuple of variables drawn, in this
fixed order, from ``("x", "y", "P", "Q")``.  The tag variables ``P`` and ``Q``
only appear in subalgebra-membership computations; everything else works in
``("x", "y")``.

Coefficients are stored as ``int`` when integral and as
:class:`fractions.Fraction` otherwise, so the common integer case stays fast
while arithmetic remains exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

try:  # GMP multiplication is much faster on the huge integers below
    from gmpy2 import mpz as _bigint
except ImportError:  # pragma: no cover
    _bigint = int

ALL_VARS = ("x", "y", "P", "Q")
XY = ("x", "y")
XYPQ = ALL_VARS

NEG_INF = float("-inf")

Exps = Tuple[int, ...]
Scalar = Union[int, Fraction]


class PolyError(ValueError):
    """Base class for errors raised by this package."""


class RingMismatch(PolyError):
    pass


class BudgetExceeded(PolyError):
    """A configured degree, basis-size or step budget was exceeded."""


def as_scalar(c) -> Scalar:
    if isinstance(c, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    if isinstance(c, str):
        return as_scalar(Fraction(c))
    raise TypeError(f"not an exact scalar: {c!r}")


def _norm(c):
    # Fraction with denominator 1 collapses to int
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


def grlex_key(e: Exps):
    return (sum(e), e)


def check_ring(vars: Sequence[str]) -> Tuple[str, ...]:
    vars = tuple(vars)
    if not 1 <= len(vars) <= 4:
        raise RingMismatch(f"ring must have 1 to 4 variables, got {vars}")
    pos = [ALL_VARS.index(v) if v in ALL_VARS else -1 for v in vars]
    if -1 in pos or pos != sorted(set(pos)):
        raise RingMismatch(f"ring variables must be an ordered subset of {ALL_VARS}: {vars}")
    return vars


class Poly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("vars", "_terms", "_hash")

    def __init__(self, terms: Mapping[Exps, object] | None = None, vars: Sequence[str] = XY):
        vars = check_ring(vars)
        n = len(vars)
        clean: Dict[Exps, Scalar] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(k) for k in e)
            if len(e) != n or min(e, default=0) < 0:
                raise PolyError(f"bad exponent vector {e} for ring {vars}")
            c = as_scalar(c)
            if c:
                clean[e] = _norm(clean.get(e, 0) + c)
                if not clean[e]:
                    del clean[e]
        self.vars = vars
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, vars, terms) -> "Poly":
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p.vars = vars
        p._terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c, vars: Sequence[str] = XY) -> "Poly":
        vars = check_ring(vars)
        c = as_scalar(c)
        return cls._raw(vars, {(0,) * len(vars): c} if c else {})

    @classmethod
    def zero(cls, vars: Sequence[str] = XY) -> "Poly":
        return cls._raw(check_ring(vars), {})

    @classmethod
    def one(cls, vars: Sequence[str] = XY) -> "Poly":
        return cls.const(1, vars)

    @classmethod
    def var(cls, name: str, vars: Sequence[str] = XY) -> "Poly":
        vars = check_ring(vars)
        if name not in vars:
            raise RingMismatch(f"variable {name!r} not in ring {vars}")
        e = tuple(1 if v == name else 0 for v in vars)
        return cls._raw(vars, {e: 1})

    @classmethod
    def gens(cls, vars: Sequence[str] = XY) -> Tuple["Poly", ...]:
        return tuple(cls.var(v, vars) for v in check_ring(vars))

    @classmethod
    def monomial(cls, exps: Exps, coeff=1, vars: Sequence[str] = XY) -> "Poly":
        return cls({tuple(exps): coeff}, vars)

    # -- inspection ---------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exps, Scalar]:
        return MappingProxyType(self._terms)

    @property
    def nvars(self) -> int:
        return len(self.vars)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        if not self._terms:
            return True
        return len(self._terms) == 1 and not any(next(iter(self._terms)))

    def constant_value(self) -> Scalar:
        """Value of the constant term."""
        return self._terms.get((0,) * self.nvars, 0)

    def coeff(self, exps: Exps) -> Scalar:
        return self._terms.get(tuple(exps), 0)

    def degree(self):
        """Total degree; ``NEG_INF`` for the zero polynomial."""
        if not self._terms:
            return NEG_INF
        return max(sum(e) for e in self._terms)

    def degree_in(self, var: str):
        i = self._index(var)
        if not self._terms:
            return NEG_INF
        return max(e[i] for e in self._terms)

    def monomials(self) -> list:
        """Exponent vectors in descending graded-lex order."""
        return sorted(self._terms, key=grlex_key, reverse=True)

    def items(self):
        """``(exps, coeff)`` pairs in descending graded-lex order."""
        return [(e, self._terms[e]) for e in self.monomials()]

    def leading_term(self, key=grlex_key) -> Tuple[Exps, Scalar]:
        if not self._terms:
            raise PolyError("zero polynomial has no leading term")
        e = max(self._terms, key=key)
        return e, self._terms[e]

    def involves(self, var: str) -> bool:
        i = self._index(var)
        return any(e[i] for e in self._terms)

    def homogeneous_components(self) -> Dict[int, "Poly"]:
        comps: Dict[int, dict] = {}
        for e, c in self._terms.items():
            comps.setdefault(sum(e), {})[e] = c
        return {d: Poly._raw(self.vars, t) for d, t in sorted(comps.items())}

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self._terms}) <= 1

    def content(self) -> Fraction:
        """Positive rational c with self / c primitive integral."""
        if not self._terms:
            return Fraction(1)
        num = 0
        den = 1
        for c in self._terms.values():
            c = Fraction(c)
            num = math.gcd(num, c.numerator)
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> "Poly":
        """Integer polynomial with content 1 and positive leading coefficient."""
        if not self._terms:
            return self
        c = self.content()
        if self.leading_term()[1] < 0:
            c = -c
        return self.scale(1 / c)

    def monic(self, key=grlex_key) -> "Poly":
        if not self._terms:
            return self
        return self.scale(Fraction(1) / Fraction(self.leading_term(key)[1]))

    # -- ring plumbing ------------------------------------------------------

    def _index(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise RingMismatch(f"variable {var!r} not in ring {self.vars}") from None

    def to_ring(self, vars: Sequence[str]) -> "Poly":
        """Re-express in another ring; variables that occur must be present there."""
        vars = check_ring(vars)
        if vars == self.vars:
            return self
        pos = []
        for i, v in enumerate(self.vars):
            if v in vars:
                pos.append((i, vars.index(v)))
            elif any(e[i] for e in self._terms):
                raise RingMismatch(f"{v!r} occurs but is missing from ring {vars}")
        out = {}
        for e, c in self._terms.items():
            ne = [0] * len(vars)
            for i, j in pos:
                ne[j] = e[i]
            out[tuple(ne)] = c
        return Poly._raw(vars, out)

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise RingMismatch(f"ring mismatch: {self.vars} vs {other.vars}")
            return other
        return Poly.const(as_scalar(other), self.vars)

    # -- arithmetic ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.vars == other.vars and self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_constant() and self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.vars, frozenset(self._terms.items())))
        return self._hash

    def __neg__(self) -> "Poly":
        return Poly._raw(self.vars, {e: -c for e, c in self._terms.items()})

    def __pos__(self) -> "Poly":
        return self

    def _addsub(self, other, sign: int) -> "Poly":
        other = self._coerce(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + sign * c
            if v:
                out[e] = _norm(v)
            else:
                out.pop(e, None)
        return Poly._raw(self.vars, out)

    def __add__(self, other) -> "Poly":
        return self._addsub(other, 1)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        return self._addsub(other, -1)

    def __rsub__(self, other) -> "Poly":
        return (-self)._addsub(other, 1)

    def scale(self, c) -> "Poly":
        c = as_scalar(c)
        if not c:
            return Poly._raw(self.vars, {})
        if c == 1:
            return self
        return Poly._raw(self.vars, {e: _norm(v * c) for e, v in self._terms.items()})

    def mul_term(self, exps: Exps, c) -> "Poly":
        c = as_scalar(c)
        if not c:
            return Poly._raw(self.vars, {})
        return Poly._raw(
            self.vars,
            {tuple(a + b for a, b in zip(e, exps)): _norm(v * c) for e, v in self._terms.items()},
        )

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            try:
                return self.scale(other)
            except TypeError:
                return NotImplemented
        other = self._coerce(other)
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        if self.nvars == 2 and len(b) > 8:
            return Poly._raw(self.vars, _kronecker_mul(a, b))
        out: Dict[Exps, Scalar] = {}
        get = out.get
        if self.nvars == 2:
            for (i2, j2), c2 in b.items():
                for (i1, j1), c1 in a.items():
                    k = (i1 + i2, j1 + j2)
                    out[k] = get(k, 0) + c1 * c2
        else:
            for e2, c2 in b.items():
                for e1, c1 in a.items():
                    k = tuple(u + v for u, v in zip(e1, e2))
                    out[k] = get(k, 0) + c1 * c2
        return Poly._raw(self.vars, {e: _norm(c) for e, c in out.items() if c})

    def __rmul__(self, other) -> "Poly":
        return self.__mul__(other)

    def __truediv__(self, other) -> "Poly":
        if isinstance(other, Poly):
            q = self.div_exact(other)
            if q is None:
                raise PolyError("polynomial division is not exact")
            return q
        return self.scale(Fraction(1) / Fraction(as_scalar(other)))

    def __pow__(self, k: int) -> "Poly":
        if not isinstance(k, int) or k < 0:
            raise PolyError("exponent must be a non-negative integer")
        result = Poly.one(self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def div_exact(self, g: "Poly"):
        """Quotient ``self / g`` if ``g`` divides ``self`` exactly, else ``None``."""
        g = self._coerce(g)
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lm_g, lc_g = g.leading_term()
        r = dict(self._terms)
        q: Dict[Exps, Scalar] = {}
        while r:
            e = max(r, key=grlex_key)
            d = tuple(a - b for a, b in zip(e, lm_g))
            if min(d) < 0:
                return None
            c = _norm(Fraction(r[e]) / lc_g)
            q[d] = c
            for ge, gc in g._terms.items():
                k = tuple(a + b for a, b in zip(ge, d))
                v = r.get(k, 0) - c * gc
                if v:
                    r[k] = _norm(v)
                else:
                    r.pop(k, None)
        return Poly._raw(self.vars, q)

    # -- calculus and substitution -----------------------------------------

    def partial(self, var: str) -> "Poly":
        i = self._index(var)
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1 :]
                out[ne] = c * e[i]
        return Poly._raw(self.vars, out)

    def substitute(self, images: Sequence["Poly"], degree_cap=None) -> "Poly":
        """Replace variable ``i`` by ``images[i]`` and expand.

        Terms are grouped by their exponents in all but the first variable, so
        the number of full polynomial products equals the number of such
        groups rather than the number of terms.
        """
        images = list(images)
        if len(images) != self.nvars:
            raise PolyError(f"need {self.nvars} images, got {len(images)}")
        target = None
        for im in images:
            if isinstance(im, Poly):
                if target is not None and im.vars != target:
                    raise RingMismatch("images must share one ring")
                target = im.vars
        if target is None:
            target = self.vars
        images = [im if isinstance(im, Poly) else Poly.const(im, target) for im in images]

        powers = [[Poly.one(target)] for _ in images]

        def power(i: int, k: int) -> Poly:
            pw = powers[i]
            while len(pw) <= k:
                nxt = pw[-1] * images[i]
                if degree_cap is not None and nxt.degree() > degree_cap:
                    raise BudgetExceeded(f"degree {nxt.degree()} exceeds cap {degree_cap}")
                pw.append(nxt)
            return pw[k]

        dead = [i for i, im in enumerate(images) if im.is_zero()]
        groups: Dict[Exps, Dict[int, Scalar]] = {}
        for e, c in self._terms.items():
            if any(e[i] for i in dead):
                continue
            groups.setdefault(e[1:], {})[e[0]] = c

        total: Dict[Exps, Scalar] = {}
        for rest, inner in groups.items():
            acc: Dict[Exps, Scalar] = {}
            for k, c in inner.items():
                for me, mc in power(0, k)._terms.items():
                    acc[me] = acc.get(me, 0) + c * mc
            part = Poly._raw(target, {e: _norm(v) for e, v in acc.items() if v})
            for i, k in enumerate(rest, start=1):
                if k:
                    part = part * power(i, k)
            if degree_cap is not None and part.degree() > degree_cap:
                raise BudgetExceeded(f"degree {part.degree()} exceeds cap {degree_cap}")
            for me, mc in part._terms.items():
                total[me] = total.get(me, 0) + mc
        return Poly._raw(target, {e: _norm(v) for e, v in total.items() if v})

    def __call__(self, *images) -> "Poly":
        return self.substitute(images)

    def __repr__(self) -> str:
        from .parse import print_poly

        return f"Poly({print_poly(self)!r}, vars={self.vars!r})"

    def __str__(self) -> str:
        from .parse import print_poly

        return print_poly(self)


def _clear_denominators(terms) -> Tuple[dict, int]:
    den = 1
    for c in terms.values():
        if type(c) is Fraction:
            den = den * c.denominator // math.gcd(den, c.denominator)
    if den == 1:
        return terms, 1
    return {e: int(c * den) for e, c in terms.items()}, den


def _kronecker_mul(a, b) -> Dict[Exps, Scalar]:
    """Bivariate product through one big-integer multiplication.

    Exponents ``(i, j)`` map to digit ``i * width + j`` in base ``2**bits``;
    digits are signed, so a bias makes every digit non-negative before the
    result is split back apart.
    """
    a, da = _clear_denominators(a)
    b, db = _clear_denominators(b)
    width = max(e[1] for e in a) + max(e[1] for e in b) + 1
    bound = max(abs(c) for c in a.values()) * max(abs(c) for c in b.values()) * min(len(a), len(b))
    nbytes = (bound.bit_length() + 2 + 7) // 8
    bits = 8 * nbytes
    ndig = (max(e[0] for e in a) + max(e[0] for e in b) + 1) * width

    def pack(terms) -> int:
        pos = bytearray(nbytes * ndig)
        neg = bytearray(nbytes * ndig)
        for (i, j), c in terms.items():
            k = (i * width + j) * nbytes
            if c > 0:
                pos[k : k + nbytes] = c.to_bytes(nbytes, "little")
            else:
                neg[k : k + nbytes] = (-c).to_bytes(nbytes, "little")
        return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")

    va, vb = pack(a), pack(b)
    half = 1 << (bits - 1)
    bias = half * (((1 << (bits * ndig)) - 1) // ((1 << bits) - 1))
    prod = int(_bigint(va) * _bigint(vb)) if len(a) * len(b) > 4096 else va * vb
    raw = (prod + bias).to_bytes(nbytes * ndig, "little")
    den = da * db
    out: Dict[Exps, Scalar] = {}
    for k in range(ndig):
        c = int.from_bytes(raw[k * nbytes : (k + 1) * nbytes], "little") - half
        if c:
            out[divmod(k, width)] = c if den == 1 else _norm(Fraction(c, den))
    return out


def arith(f: Poly, g: Poly, op: str) -> Poly:
    if not (isinstance(f, Poly) and isinstance(g, Poly)):
        raise TypeError("arith expects two Poly values")
    if f.vars != g.vars:
        raise RingMismatch(f"ring mismatch: {f.vars} vs {g.vars}")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown op {op!r}")


def substitute(f: Poly, images: Sequence[Poly], degree_cap=None) -> Poly:
    return f.substitute(images, degree_cap=degree_cap)


def partial(f: Poly, var: str) -> Poly:
    return f.partial(var)


class UniPoly:
    """Polynomial in one variable ``t``; coefficients listed from degree 0 up."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_norm(as_scalar(c)) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def t(cls) -> "UniPoly":
        return cls([0, 1])

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def lead(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> "UniPoly":
        other = other if isinstance(other, UniPoly) else UniPoly([other])
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UniPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "UniPoly":
        other = other if isinstance(other, UniPoly) else UniPoly([other])
        return self + (-other)

    def __mul__(self, other) -> "UniPoly":
        if not isinstance(other, UniPoly):
            return UniPoly(c * as_scalar(other) for c in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        r = UniPoly([1])
        for _ in range(k):
            r = r * self
        return r

    def divmod(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        r = [Fraction(c) for c in self.coeffs]
        q = [Fraction(0)] * max(len(r) - len(other.coeffs) + 1, 0)
        lead = Fraction(other.lead())
        dg = other.degree
        for i in range(len(r) - 1, dg - 1, -1):
            c = r[i] / lead
            if c:
                q[i - dg] = c
                for j, oc in enumerate(other.coeffs):
                    r[i - dg + j] -= c * oc
        return UniPoly(q), UniPoly(r[:dg] if dg > 0 else [])

    def monic(self) -> "UniPoly":
        if not self.coeffs:
            return self
        return self * (Fraction(1) / Fraction(self.lead()))

    def __call__(self, value):
        if isinstance(value, Poly):
            return self.compose(value)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return _norm(acc) if isinstance(acc, Fraction) else acc

    def compose(self, p: Poly, degree_cap=None) -> Poly:
        """Expand ``h(p)`` as a polynomial in ``p``'s ring."""
        acc = Poly.zero(p.vars)
        for c in reversed(self.coeffs):
            acc = acc * p + c
            if degree_cap is not None and acc.degree() > degree_cap:
                raise BudgetExceeded(f"degree {acc.degree()} exceeds cap {degree_cap}")
        return acc

    def rational_roots(self) -> list:
        """All rational roots, found with the rational root theorem."""
        if not self.coeffs:
            raise PolyError("zero polynomial has every root")
        den = 1
        for c in self.coeffs:
            den = den * Fraction(c).denominator // math.gcd(den, Fraction(c).denominator)
        ints = [int(Fraction(c) * den) for c in self.coeffs]
        roots = []
        shift = 0
        while ints and ints[0] == 0:
            ints.pop(0)
            shift += 1
        if shift:
            roots.append(Fraction(0))
        if len(ints) <= 1:
            return roots
        cands = set()
        for a in _divisors(abs(ints[0])):
            for b in _divisors(abs(ints[-1])):
                cands.add(Fraction(a, b))
                cands.add(Fraction(-a, b))
        poly = UniPoly(ints)
        for r in sorted(cands, key=lambda r: (abs(r), r < 0)):
            if poly(r) == 0:
                roots.append(r)
        return roots

    def __repr__(self) -> str:
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        from .parse import print_poly

        return print_poly(self.to_poly(("x",)), names={"x": "t"})

    def to_poly(self, vars=("x",), var: str | None = None) -> Poly:
        var = var or vars[0]
        i = vars.index(var)
        return Poly(
            {tuple(k if j == i else 0 for j in range(len(vars))): c for k, c in enumerate(self.coeffs)},
            vars,
        )


def _divisors(n: int) -> list:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d * d != n:
                out.append(n // d)
        d += 1
    return sorted(out)


def uni_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


def homog_gcd(g: Poly) -> Poly:
    """Greatest homogeneous polynomial dividing every homogeneous part of ``g``.

    ``g`` has a non-constant homogeneous divisor exactly when the result is
    non-constant.  The result is normalized to leading coefficient 1.
    """
    if g.vars != XY:
        raise RingMismatch("homog_gcd works over (x, y)")
    if g.is_zero():
        raise PolyError("homog_gcd of the zero polynomial")
    min_a = min_b = None
    common = None
    for comp in g.homogeneous_components().values():
        a = min(e[0] for e in comp.terms)
        b = min(e[1] for e in comp.terms)
        # dehomogenize x^a y^b H(x, y) to H(t, 1), keyed by power of t = x/y
        top = max(e[0] for e in comp.terms) - a
        cs = [0] * (top + 1)
        for e, c in comp.terms.items():
            cs[e[0] - a] = c
        uni = UniPoly(cs)
        min_a = a if min_a is None else min(min_a, a)
        min_b = b if min_b is None else min(min_b, b)
        common = uni if common is None else uni_gcd(common, uni)
    common = common.monic()
    d = common.degree
    out = {}
    for k, c in enumerate(common.coeffs):
        if c:
            out[(k + min_a, d - k + min_b)] = c
    return Poly(out, XY).monic()


@dataclass(frozen=True)
class Budget:
    """Resource caps shared by the iterative algorithms."""

    degree_cap: int = 512
    basis_cap: int = 2000
    reduction_steps: int = 10**6


DEFAULT_BUDGET = Budget()
