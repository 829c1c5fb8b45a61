"""Exact tools for polynomial retracts of Q[x, y] and Keller maps."""

from .endo import Endo, TameStep, TameWord, apply, compose, invert_tame, iterate, random_tame
from .groebner import (
    MembershipCert,
    MonomialOrder,
    UnimodCert,
    buchberger,
    ideal_member,
    is_automorphism,
    subalg_member,
    unimodular_cert,
)
from .jacobian import alg_dependent, is_keller, jac_det, jac_matrix
from .newton import NewtonPolygon, axis_edge, newton_polygon, radially_similar, thm13_reduce
from .parse import ParseError, parse_mapping, parse_poly, print_mapping, print_poly
from .polycore import (
    DEFAULT_BUDGET,
    XY,
    XYPQ,
    Budget,
    BudgetExceeded,
    Poly,
    PolyError,
    RingMismatch,
    UniPoly,
    arith,
    homog_gcd,
    partial,
    substitute,
)
from .retract import (
    NotAMReducible,
    NotARetract,
    RetractionCert,
    RetractStatus,
    am_reduce,
    cor12_retraction,
    cor14_lemmas,
    cor31_retraction,
    normalize_retract,
    subduce,
    verify_retraction,
)
from .stable import cor17_consistency, degree_trace, fixed_polys

__version__ = "0.1.0"
