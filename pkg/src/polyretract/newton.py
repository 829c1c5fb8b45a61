"""Newton polygons and the pure-x reduction loop for pairs ``(x + y*h, q)``.

The Newton polygon of ``f`` is the convex hull of its exponent support
together with the origin.  Polygons are vertex lists in counterclockwise
order starting at ``(0, 0)``; all arithmetic is on integers or fractions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from .polycore import DEFAULT_BUDGET, XY, Budget, BudgetExceeded, Poly, PolyError

Point = Tuple[int, int]


@dataclass(frozen=True)
class NewtonPolygon:
    vertices: Tuple[Point, ...]

    def __iter__(self):
        return iter(self.vertices)

    def __len__(self):
        return len(self.vertices)

    def to_json(self) -> dict:
        return {"vertices": [list(v) for v in self.vertices]}


def _cross(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def convex_hull(points) -> List[Point]:
    """Monotone chain; counterclockwise from the lexicographically smallest point."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: List[Point] = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: List[Point] = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2 and hull[0] == hull[1]:
        return hull[:1]
    return hull


def newton_polygon(f: Poly) -> NewtonPolygon:
    if f.vars != XY:
        raise PolyError("Newton polygons are defined here for (x, y) polynomials")
    if f.is_zero():
        raise PolyError("the zero polynomial has no Newton polygon")
    hull = convex_hull(list(f.terms) + [(0, 0)])
    # (0, 0) is lexicographically minimal among non-negative points, so it leads
    assert hull[0] == (0, 0)
    return NewtonPolygon(tuple(hull))


def radially_similar(A: NewtonPolygon, B: NewtonPolygon) -> Optional[Fraction]:
    """Ratio ``r > 0`` with ``r * A == B`` as vertex sets, or ``None``."""
    va, vb = set(A.vertices), set(B.vertices)
    if len(va) != len(vb):
        return None
    nza = [v for v in va if v != (0, 0)]
    nzb = [v for v in vb if v != (0, 0)]
    if not nza and not nzb:
        return Fraction(1)
    if not nza or not nzb:
        return None
    # positive scaling preserves lexicographic order
    a, b = max(nza), max(nzb)
    r = Fraction(b[0], a[0]) if a[0] else Fraction(b[1], a[1])
    if r <= 0:
        return None
    scaled = {(r * x, r * y) for x, y in va}
    if scaled != {(Fraction(x), Fraction(y)) for x, y in vb}:
        return None
    return r


def axis_edge(f: Poly, axis: str) -> bool:
    """Whether the Newton polygon of ``f`` has an edge of positive length on ``axis``."""
    if axis not in ("x", "y", "x-axis", "y-axis"):
        raise PolyError(f"unknown axis {axis!r}")
    i = 0 if axis.startswith("x") else 1
    return any(v[i] > 0 and v[1 - i] == 0 for v in newton_polygon(f).vertices)


def pure_x_terms(q: Poly) -> dict:
    """Pure powers of x of positive degree, as ``{k: coeff}``."""
    return {e[0]: c for e, c in q.terms.items() if e[1] == 0 and e[0] > 0}


def has_x_plus_y_form(p: Poly) -> bool:
    """``p == x + y*h``: the only monomial free of ``y`` is ``x`` with coefficient 1."""
    return p.vars == XY and {e: c for e, c in p.terms.items() if e[1] == 0} == {(1, 0): 1}


@dataclass(frozen=True)
class Thm13Result:
    q_final: Poly
    steps: Tuple[Tuple[object, int], ...]
    ratio: Optional[Fraction]

    @property
    def similar(self) -> bool:
        return self.ratio is not None


def thm13_reduce(p: Poly, q: Poly, budget: Budget = DEFAULT_BUDGET) -> Thm13Result:
    """Strip pure-x monomials from ``q`` by subtracting ``c_k * p^k``.

    ``p`` must be ``x + y*h``; then ``p^k`` has ``x^k`` as its only pure-x
    monomial, so each round lowers the top pure-x degree of ``q``.  The
    result records the ``(c_k, k)`` removed and whether the polygons of ``p``
    and the final ``q`` are radially similar (``ratio``).
    """
    if not has_x_plus_y_form(p):
        raise PolyError("p must have the form x + y*h")
    if q.vars != XY:
        raise PolyError("q must be over (x, y)")
    steps = []
    powers = {1: p}
    while True:
        pure = pure_x_terms(q)
        if not pure:
            break
        k = max(pure)
        c = pure[k]
        if k * max(p.degree(), 1) > budget.degree_cap:
            raise BudgetExceeded(f"p^{k} exceeds degree cap {budget.degree_cap}")
        if k not in powers:
            powers[k] = p**k
        q = q - powers[k].scale(c)
        steps.append((c, k))
    if q.is_zero():
        ratio = None
    else:
        ratio = radially_similar(newton_polygon(p), newton_polygon(q))
    return Thm13Result(q, tuple(steps), ratio)
