"""Polynomial endomorphisms of Q[x, y] and tame automorphism words.

An :class:`Endo` is determined by the images of ``x`` and ``y``; applying it
to ``f`` substitutes those images into ``f``.

Composition follows ordinary function notation on ring elements:
``compose(phi, psi)`` is the map ``f -> phi(psi(f))``.  For example with
``psi = (x -> x + y^2, y -> y)`` and ``phi = swap = (x -> y, y -> x)``::

    compose(phi, psi)(x) = phi(x + y^2) = y + x^2
    compose(psi, phi)(x) = psi(y)       = y

so a retraction written ``rho = psi phi`` (first ``phi``, then ``psi``) is
``compose(psi, phi)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence, Tuple

from .polycore import (
    DEFAULT_BUDGET,
    XY,
    Budget,
    BudgetExceeded,
    Poly,
    PolyError,
    UniPoly,
    as_scalar,
)

_X, _Y = Poly.gens(XY)


@dataclass(frozen=True)
class Endo:
    img_x: Poly
    img_y: Poly

    def __post_init__(self):
        for im in (self.img_x, self.img_y):
            if not isinstance(im, Poly) or im.vars != XY:
                raise PolyError("Endo images must be polynomials over (x, y)")

    @classmethod
    def identity(cls) -> "Endo":
        return cls(_X, _Y)

    @classmethod
    def parse(cls, text: str) -> "Endo":
        from .parse import parse_mapping

        return cls(*parse_mapping(text))

    def __str__(self) -> str:
        from .parse import print_mapping

        return print_mapping(self.img_x, self.img_y)

    def __call__(self, f: Poly) -> Poly:
        return apply(self, f)

    def images(self) -> Tuple[Poly, Poly]:
        return (self.img_x, self.img_y)

    def is_identity(self) -> bool:
        return self.img_x == _X and self.img_y == _Y

    def degree(self):
        return max(self.img_x.degree(), self.img_y.degree())


def apply(phi: Endo, f: Poly, budget: Budget = DEFAULT_BUDGET) -> Poly:
    if f.vars != XY:
        raise PolyError("endomorphisms act on polynomials over (x, y)")
    return f.substitute(phi.images(), degree_cap=budget.degree_cap)


def compose(phi: Endo, psi: Endo, budget: Budget = DEFAULT_BUDGET) -> Endo:
    """The endomorphism ``f -> phi(psi(f))``."""
    return Endo(apply(phi, psi.img_x, budget), apply(phi, psi.img_y, budget))


def iterate(phi: Endo, k: int, budget: Budget = DEFAULT_BUDGET) -> Endo:
    """``phi`` composed with itself ``k`` times."""
    if not isinstance(k, int) or k < 1:
        raise PolyError("iteration count must be a positive integer")
    result = None
    base = phi
    while True:
        if k & 1:
            result = base if result is None else compose(result, base, budget)
        k >>= 1
        if not k:
            return result
        base = compose(base, base, budget)


@dataclass(frozen=True)
class TameStep:
    """One generator of the tame group.

    ``elementary_x`` with payload ``a``: ``x -> x + a(y), y -> y``.
    ``elementary_y`` with payload ``a``: ``x -> x, y -> y + a(x)``.
    ``linear``: ``x -> m00*x + m01*y + t0, y -> m10*x + m11*y + t1``.
    """

    kind: str
    payload: UniPoly = field(default_factory=UniPoly)
    matrix: Tuple[Tuple[object, object], Tuple[object, object]] = ((1, 0), (0, 1))
    translation: Tuple[object, object] = (0, 0)

    def __post_init__(self):
        if self.kind not in ("elementary_x", "elementary_y", "linear"):
            raise PolyError(f"unknown tame step kind {self.kind!r}")
        if self.kind == "linear":
            m = tuple(tuple(as_scalar(c) for c in row) for row in self.matrix)
            t = tuple(as_scalar(c) for c in self.translation)
            object.__setattr__(self, "matrix", m)
            object.__setattr__(self, "translation", t)
            if self.det() == 0:
                raise PolyError("linear tame step needs an invertible matrix")

    @classmethod
    def shear_x(cls, a: UniPoly) -> "TameStep":
        return cls("elementary_x", payload=a)

    @classmethod
    def shear_y(cls, a: UniPoly) -> "TameStep":
        return cls("elementary_y", payload=a)

    @classmethod
    def linear(cls, matrix, translation=(0, 0)) -> "TameStep":
        return cls("linear", matrix=matrix, translation=translation)

    @classmethod
    def swap(cls) -> "TameStep":
        return cls.linear(((0, 1), (1, 0)))

    def det(self):
        (a, b), (c, d) = self.matrix
        return a * d - b * c

    def endo(self) -> Endo:
        if self.kind == "elementary_x":
            return Endo(_X + self.payload.to_poly(XY, "y"), _Y)
        if self.kind == "elementary_y":
            return Endo(_X, _Y + self.payload.to_poly(XY, "x"))
        (a, b), (c, d) = self.matrix
        t0, t1 = self.translation
        return Endo(_X * a + _Y * b + t0, _X * c + _Y * d + t1)

    def inverse(self) -> "TameStep":
        if self.kind != "linear":
            return TameStep(self.kind, payload=-self.payload)
        (a, b), (c, d) = self.matrix
        det = Fraction(self.det())
        n = ((d / det, -b / det), (-c / det, a / det))
        t0, t1 = self.translation
        u = (-(n[0][0] * t0 + n[0][1] * t1), -(n[1][0] * t0 + n[1][1] * t1))
        return TameStep.linear(n, u)

    def to_json(self) -> dict:
        if self.kind == "linear":
            return {
                "kind": "linear",
                "matrix": [[str(c) for c in row] for row in self.matrix],
                "translation": [str(c) for c in self.translation],
            }
        return {"kind": self.kind, "payload": [str(c) for c in self.payload.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "TameStep":
        if obj["kind"] == "linear":
            return cls.linear(
                tuple(tuple(Fraction(c) for c in row) for row in obj["matrix"]),
                tuple(Fraction(c) for c in obj["translation"]),
            )
        return cls(obj["kind"], payload=UniPoly(Fraction(c) for c in obj["payload"]))


@dataclass(frozen=True)
class TameWord:
    """Steps ``s1, ..., sn`` standing for the automorphism ``s1 o s2 o ... o sn``."""

    steps: Tuple[TameStep, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    def __add__(self, other: "TameWord") -> "TameWord":
        return TameWord(self.steps + other.steps)

    def endo(self, budget: Budget = DEFAULT_BUDGET) -> Endo:
        e = Endo.identity()
        for s in self.steps:
            e = compose(e, s.endo(), budget)
        return e

    def apply(self, f: Poly, budget: Budget = DEFAULT_BUDGET) -> Poly:
        """``self.endo()(f)`` one step at a time, innermost step first.

        Much cheaper than expanding the whole word when ``f`` is large.
        """
        for s in reversed(self.steps):
            f = apply(s.endo(), f, budget)
        return f

    def to_json(self) -> list:
        return [s.to_json() for s in self.steps]

    @classmethod
    def from_json(cls, obj: Sequence[dict]) -> "TameWord":
        return cls(tuple(TameStep.from_json(s) for s in obj))


def invert_tame(w: TameWord) -> TameWord:
    return TameWord(tuple(s.inverse() for s in reversed(w.steps)))


def random_tame(seed, word_len: int, coeff_bound: int, deg_bound: int) -> TameWord:
    """Seeded random tame word.

    Each step is a shear in ``x`` or ``y`` with payload degree at most
    ``deg_bound``, or an affine map whose integer matrix has determinant +-1.
    Coefficients lie in ``[-coeff_bound, coeff_bound]``.
    """
    if word_len < 0 or coeff_bound < 1 or deg_bound < 1:
        raise PolyError("random_tame bounds must be positive")
    rng = random.Random(seed)
    cb = coeff_bound
    steps = []
    for _ in range(word_len):
        kind = rng.choice(("elementary_x", "elementary_y", "linear"))
        if kind == "linear":
            while True:
                m = [[rng.randint(-cb, cb) for _ in range(2)] for _ in range(2)]
                if abs(m[0][0] * m[1][1] - m[0][1] * m[1][0]) == 1:
                    break
            t = (rng.randint(-cb, cb), rng.randint(-cb, cb))
            steps.append(TameStep.linear(m, t))
        else:
            deg = rng.randint(1, deg_bound)
            steps.append(TameStep(kind, payload=UniPoly(rng.randint(-cb, cb) for _ in range(deg + 1))))
    return TameWord(tuple(steps))


__all__ = [
    "Endo",
    "TameStep",
    "TameWord",
    "apply",
    "compose",
    "iterate",
    "invert_tame",
    "random_tame",
    "BudgetExceeded",
]
