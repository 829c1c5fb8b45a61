"""Iterated images and fixed polynomials of plane polynomial maps."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import List, Optional, Tuple

from .endo import Endo, apply, compose
from .groebner import is_automorphism
from .jacobian import is_keller
from .polycore import DEFAULT_BUDGET, XY, Budget, BudgetExceeded, Poly, PolyError, grlex_key


@dataclass(frozen=True)
class DegreeTrace:
    """``records[k-1] == (deg phi^k(x), deg phi^k(y))``."""

    records: Tuple[Tuple[object, object], ...]
    truncated: bool = False

    def to_json(self) -> list:
        def enc(d):
            return None if d == float("-inf") else d

        return [[k + 1, enc(a), enc(b)] for k, (a, b) in enumerate(self.records)]


def degree_trace(phi: Endo, kmax: int, budget: Budget = DEFAULT_BUDGET) -> DegreeTrace:
    """Degrees of ``phi^k(x)`` and ``phi^k(y)`` for ``k = 1..kmax``.

    Stops early with ``truncated=True`` once the degree cap is hit.
    """
    if kmax < 1:
        raise PolyError("kmax must be at least 1")
    cur = phi
    records = [(phi.img_x.degree(), phi.img_y.degree())]
    for _ in range(kmax - 1):
        try:
            cur = compose(phi, cur, budget)
        except BudgetExceeded:
            return DegreeTrace(tuple(records), truncated=True)
        records.append((cur.img_x.degree(), cur.img_y.degree()))
    return DegreeTrace(tuple(records))


def monomials_upto(d: int) -> List[Tuple[int, int]]:
    """Exponents of total degree at most ``d`` in ascending grlex order."""
    return sorted(((i, j) for i, j in product(range(d + 1), repeat=2) if i + j <= d), key=grlex_key)


def bareiss_echelon(rows: List[List[int]]) -> Tuple[List[List[int]], List[int]]:
    """Fraction-free row echelon form of an integer matrix.

    Pivots are taken column by column, from the first row (lowest index)
    holding a non-zero entry.  Returns the echelon rows and pivot columns.
    """
    m = [list(r) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    prev = 1
    for col in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        a = m[r][col]
        for i in range(r + 1, len(m)):
            b = m[i][col]
            for j in range(col, ncols):
                # exact by Sylvester's identity
                m[i][j] = (a * m[i][j] - b * m[r][j]) // prev
        prev = a
        pivots.append(col)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def nullspace(rows: List[List[int]], ncols: int) -> List[List[Fraction]]:
    """Basis of the kernel, one vector per free column, in column order."""
    ech, pivots = bareiss_echelon(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for r in range(len(pivots) - 1, -1, -1):
            pc = pivots[r]
            s = sum((ech[r][j] * v[j] for j in range(pc + 1, ncols)), Fraction(0))
            v[pc] = -s / ech[r][pc]
        basis.append(v)
    return basis


@dataclass(frozen=True)
class FixedSpace:
    degree_bound: int
    basis: Tuple[Poly, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def nonconstant(self) -> Tuple[Poly, ...]:
        return tuple(f for f in self.basis if not f.is_constant())


def fixed_polys(phi: Endo, d: int, budget: Budget = DEFAULT_BUDGET) -> FixedSpace:
    """Basis of ``{f : deg f <= d, phi(f) == f}``, solved exactly over Q."""
    if d < 0:
        raise PolyError("degree bound must be non-negative")
    monos = monomials_upto(d)
    images = []
    for e in monos:
        m = Poly.monomial(e, 1, XY)
        images.append(apply(phi, m, budget) - m)
    support = sorted({e for im in images for e in im.terms}, key=grlex_key)
    rows = []
    for e in support:
        row = [Fraction(im.coeff(e)) for im in images]
        den = 1
        for c in row:
            den = den * c.denominator // math.gcd(den, c.denominator)
        rows.append([int(c * den) for c in row])
    basis = []
    for v in nullspace(rows, len(monos)):
        f = Poly({e: c for e, c in zip(monos, v) if c}, XY).primitive()
        if apply(phi, f, budget) != f:
            raise AssertionError("fixed polynomial failed to verify")
        basis.append(f)
    return FixedSpace(d, tuple(basis))


class Cor17Status(enum.Enum):
    CONSISTENT = "consistent"
    NOT_KELLER = "premise not met (not Keller)"
    NO_FIXED = "premise not met (no fixed polynomial found up to d)"
    VIOLATION = "THEOREM VIOLATION"


@dataclass(frozen=True)
class Cor17Report:
    status: Cor17Status
    fixed: Optional[Poly] = None
    inverse: Optional[Endo] = None


def cor17_consistency(phi: Endo, d: int, budget: Budget = DEFAULT_BUDGET) -> Cor17Report:
    """Check that a Keller map fixing a non-constant polynomial is invertible.

    Returns ``VIOLATION`` only if a Keller map fixes something non-constant
    of degree at most ``d`` yet is not an automorphism, which would mean a
    bug in this package.
    """
    if not is_keller(phi):
        return Cor17Report(Cor17Status.NOT_KELLER)
    nonconst = fixed_polys(phi, d, budget).nonconstant()
    if not nonconst:
        return Cor17Report(Cor17Status.NO_FIXED)
    ok, inv = is_automorphism(phi, budget)
    if not ok:
        return Cor17Report(Cor17Status.VIOLATION, nonconst[0])
    return Cor17Report(Cor17Status.CONSISTENT, nonconst[0], inv)
