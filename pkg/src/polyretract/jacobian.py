"""Jacobian matrices, the Keller condition and algebraic dependence of pairs."""

from __future__ import annotations

from .endo import Endo
from .polycore import Poly, PolyError


def jac_matrix(phi: Endo):
    """2x2 tuple with entry ``(i, j)`` the derivative of image ``i`` in variable ``j``."""
    return tuple((im.partial("x"), im.partial("y")) for im in phi.images())


def jac_det(phi: Endo) -> Poly:
    (px, py), (qx, qy) = jac_matrix(phi)
    return px * qy - py * qx


def is_keller(phi: Endo) -> bool:
    d = jac_det(phi)
    return d.is_constant() and not d.is_zero()


def alg_dependent(p: Poly, q: Poly) -> bool:
    """Whether ``p`` and ``q`` are algebraically dependent over Q.

    In characteristic zero two polynomials in two variables are dependent
    exactly when their Jacobian determinant vanishes identically.
    """
    if p.vars != q.vars:
        raise PolyError("p and q must share a ring")
    return jac_det(Endo(p, q)).is_zero()
