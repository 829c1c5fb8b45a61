"""Command-line front end: ``polyretract <verb> [args] [--json]``.

Exit codes: 0 success or affirmative verdict, 1 negative verdict, 2 usage or
parse error, 3 budget exceeded, 4 failed internal self-check.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from dataclasses import replace

from .endo import Endo, TameWord, random_tame
from .groebner import GRLEX, LEX, buchberger, ideal_member, is_automorphism, subalg_member, unimodular_cert
from .jacobian import alg_dependent, is_keller, jac_det
from .newton import newton_polygon, radially_similar, thm13_reduce
from .parse import ParseError, parse_poly, print_poly
from .polycore import DEFAULT_BUDGET, XY, BudgetExceeded, Poly, PolyError, UniPoly
from .retract import (
    Cor31Status,
    NotAMReducible,
    NotARetract,
    am_reduce,
    cor12_retraction,
    cor14_lemmas,
    cor31_retraction,
    normalize_retract,
    subduce,
    verify_retraction,
)
from .stable import Cor17Status, cor17_consistency, degree_trace, fixed_polys

SCHEMA = 1


class Outcome:
    def __init__(self, code: int, text: str, data: dict, versioned: bool = True):
        self.code = code
        self.text = text
        self.data = data
        # polygon output is the bare vertex object, without the schema tag
        self.versioned = versioned


def _p(f: Poly) -> str:
    return print_poly(f)


def _u(h: UniPoly) -> str:
    return str(h)


def _frac(c) -> str:
    return str(c)


class _Inputs:
    def __init__(self, stdin):
        self.stdin = stdin
        self.used = False

    def text(self, arg: str) -> str:
        if arg != "-":
            return arg
        if self.used:
            raise PolyError("stdin placeholder '-' may appear only once")
        self.used = True
        return self.stdin.read().strip()

    def poly(self, arg: str, ring=XY) -> Poly:
        return parse_poly(self.text(arg), ring)

    def endo(self, arg: str) -> Endo:
        return Endo.parse(self.text(arg))


def _endo_json(e: Endo) -> dict:
    return {"x": _p(e.img_x), "y": _p(e.img_y)}


def _cert_json(cert) -> dict:
    out = {"retraction": _endo_json(cert.retraction), "generator": _p(cert.generator)}
    if cert.normalizer is not None:
        out["normalizer"] = cert.normalizer.to_json()
        out["normal_form_q"] = _p(cert.normal_form_q)
    if cert.am_steps:
        out["steps"] = [s.to_json() for s in cert.am_steps]
    return out


def _word_text(w: TameWord) -> str:
    if not w.steps:
        return "identity"
    return " o ".join(f"({s.endo()})" for s in w.steps)


# -- verbs -------------------------------------------------------------------


def v_parse(a, inp, budget):
    f = inp.poly(a.poly)
    return Outcome(0, _p(f), {"poly": _p(f)})


def v_jacdet(a, inp, budget):
    d = jac_det(inp.endo(a.map))
    return Outcome(0, _p(d), {"det": _p(d)})


def v_keller(a, inp, budget):
    phi = inp.endo(a.map)
    d = jac_det(phi)
    if is_keller(phi):
        return Outcome(0, f"determinant {_p(d)} is a nonzero constant", {"verdict": "keller", "det": _p(d)})
    return Outcome(1, f"determinant {_p(d)} is not a nonzero constant", {"verdict": "not keller", "det": _p(d)})


def v_dependent(a, inp, budget):
    p, q = inp.poly(a.p), inp.poly(a.q)
    d = jac_det(Endo(p, q))
    if alg_dependent(p, q):
        return Outcome(0, "dependent: Jacobian determinant is identically zero", {"verdict": "dependent", "det": "0"})
    return Outcome(1, f"independent: Jacobian determinant is {_p(d)}", {"verdict": "independent", "det": _p(d)})


def _ring(a):
    return tuple(v.strip() for v in a.ring.split(","))


def v_gb(a, inp, budget):
    ring = _ring(a)
    gens = [inp.poly(s, ring) for s in a.polys]
    order = {"grlex": GRLEX, "lex": LEX}[a.order]
    basis = buchberger(gens, order, budget=budget)
    return Outcome(0, "\n".join(_p(g) for g in basis), {"basis": [_p(g) for g in basis], "order": a.order})


def v_member(a, inp, budget):
    ring = _ring(a)
    f = inp.poly(a.f, ring)
    gens = [inp.poly(s, ring) for s in a.gens]
    cof = ideal_member(f, gens, budget=budget)
    if cof is None:
        return Outcome(1, "not a member", {"verdict": "not a member"})
    lines = [f"c{i + 1} = {_p(c)}" for i, c in enumerate(cof)]
    return Outcome(0, "member\n" + "\n".join(lines), {"verdict": "member", "cofactors": [_p(c) for c in cof]})


def v_unimodular(a, inp, budget):
    p = inp.poly(a.p)
    cert = unimodular_cert(p, budget)
    if cert is None or not cert.verify():
        return Outcome(1, "not unimodular over Q", {"verdict": "not unimodular over Q"})
    return Outcome(
        0,
        f"unimodular gradient\nu = {_p(cert.u)}\nv = {_p(cert.v)}",
        {"verdict": "unimodular", "u": _p(cert.u), "v": _p(cert.v)},
    )


def v_subalg(a, inp, budget):
    f, p, q = inp.poly(a.f), inp.poly(a.p), inp.poly(a.q)
    cert = subalg_member(f, p, q, budget)
    if cert is None or not cert.verify():
        return Outcome(1, "not a member", {"verdict": "not a member"})
    e = _p(cert.expression)
    return Outcome(0, f"member: f = {e}", {"verdict": "member", "expression": e})


def v_isauto(a, inp, budget):
    phi = inp.endo(a.map)
    ok, inv = is_automorphism(phi, budget)
    if not ok:
        return Outcome(1, "not an automorphism", {"verdict": "not an automorphism"})
    return Outcome(0, f"automorphism\ninverse: {inv}", {"verdict": "automorphism", "inverse": _endo_json(inv)})


def _poly_text(poly):
    return " ".join(f"({i},{j})" for i, j in poly.vertices)


def v_polygon(a, inp, budget):
    poly = newton_polygon(inp.poly(a.p))
    return Outcome(0, _poly_text(poly), poly.to_json(), versioned=False)


def v_similar(a, inp, budget):
    A, B = newton_polygon(inp.poly(a.p)), newton_polygon(inp.poly(a.q))
    r = radially_similar(A, B)
    if r is None:
        return Outcome(1, "not radially similar", {"verdict": "not similar"})
    return Outcome(0, f"radially similar with ratio {r}", {"verdict": "similar", "ratio": _frac(r)})


def v_thm13(a, inp, budget):
    res = thm13_reduce(inp.poly(a.p), inp.poly(a.q), budget)
    lines = [f"step {i + 1}: subtract {c} * p^{k}" for i, (c, k) in enumerate(res.steps)]
    lines.append(f"q_final = {_p(res.q_final)}")
    verdict = f"radially similar with ratio {res.ratio}" if res.similar else "not radially similar"
    lines.append(verdict)
    data = {
        "steps": [[_frac(c), k] for c, k in res.steps],
        "q_final": _p(res.q_final),
        "verdict": "similar" if res.similar else "not similar",
    }
    if res.similar:
        data["ratio"] = _frac(res.ratio)
    return Outcome(0 if res.similar else 1, "\n".join(lines), data)


def v_subduce(a, inp, budget):
    h = subduce(inp.poly(a.f), inp.poly(a.p), budget)
    if h is None:
        return Outcome(1, "not in K[p]", {"verdict": "not in K[p]"})
    return Outcome(0, f"h(t) = {_u(h)}", {"verdict": "member", "h": [_frac(c) for c in h.coeffs]})


def v_amreduce(a, inp, budget):
    try:
        res = am_reduce(inp.poly(a.f), inp.poly(a.g), budget)
    except NotAMReducible as exc:
        return Outcome(1, str(exc), {"verdict": "not an AM-reducible pair"})
    lines = [f"generator = {_p(res.generator)}"]
    lines += [f"step: {s.kind} c={s.c} k={s.k}" for s in res.steps]
    lines.append(f"f = {_u(res.first_in_generator)} at t = generator")
    lines.append(f"g = {_u(res.second_in_generator)} at t = generator")
    return Outcome(
        0,
        "\n".join(lines),
        {
            "verdict": "reduced",
            "generator": _p(res.generator),
            "steps": [s.to_json() for s in res.steps],
            "f_in_generator": [_frac(c) for c in res.first_in_generator.coeffs],
            "g_in_generator": [_frac(c) for c in res.second_in_generator.coeffs],
        },
    )


def v_verify_retraction(a, inp, budget):
    rep = verify_retraction(inp.endo(a.map), budget)
    if not rep.ok:
        return Outcome(1, rep.status.value, {"verdict": rep.status.value})
    cert = rep.cert
    return Outcome(
        0,
        f"proper retract K[p] with p = {_p(cert.generator)}",
        {"verdict": rep.status.value, "certificate": _cert_json(cert)},
    )


def v_normalize(a, inp, budget):
    try:
        res = normalize_retract(inp.endo(a.map), budget)
    except NotARetract as exc:
        return Outcome(1, str(exc), {"verdict": exc.report.status.value})
    text = "\n".join(
        [
            f"psi = {_word_text(res.psi)}",
            f"psi(p) = {_p(res.p_normal)}",
            f"q = {_p(res.q)}",
        ]
    )
    return Outcome(
        0,
        text,
        {
            "verdict": "normalized",
            "psi": res.psi.to_json(),
            "p_normal": _p(res.p_normal),
            "q": _p(res.q),
            "certificate": _cert_json(res.cert),
        },
    )


def v_cor12(a, inp, budget):
    p = inp.poly(a.p)
    phi = inp.endo(a.map)
    try:
        cert = cor12_retraction(p, phi, budget)
    except PolyError as exc:
        if "phi(p) != x" not in str(exc):
            raise
        return Outcome(1, "phi(p) != x", {"verdict": "phi(p) != x"})
    return Outcome(
        0,
        f"retraction: {cert.retraction}",
        {"verdict": "retract", "certificate": _cert_json(cert)},
    )


def v_cor31(a, inp, budget):
    res = cor31_retraction(inp.poly(a.p), budget)
    data = {"verdict": res.status.value}
    if res.divisor is not None:
        data["divisor"] = _p(res.divisor)
    if res.status is not Cor31Status.RETRACT:
        return Outcome(1, res.status.value, data)
    if res.c is not None:
        data["c"] = _frac(res.c)
    data["certificate"] = _cert_json(res.cert)
    return Outcome(0, f"retraction: {res.cert.retraction}", data)


def v_cor14(a, inp, budget):
    r = cor14_lemmas(inp.poly(a.p))
    text = (
        f"divisible_by_x: {str(r.divisible_by_x).lower()}\n"
        f"y_axis_edge: {str(r.y_axis_edge).lower()}\n"
        f"consistent_with_jacobian_mate: {str(r.consistent_with_jacobian_mate).lower()}"
    )
    return Outcome(
        0,
        text,
        {
            "divisible_by_x": r.divisible_by_x,
            "y_axis_edge": r.y_axis_edge,
            "consistent_with_jacobian_mate": r.consistent_with_jacobian_mate,
        },
    )


def v_trace(a, inp, budget):
    tr = degree_trace(inp.endo(a.map), a.kmax, budget)
    lines = [f"k={k} deg x={dx} deg y={dy}" for k, dx, dy in tr.to_json()]
    if tr.truncated:
        lines.append("truncated: degree cap reached")
    return Outcome(3 if tr.truncated else 0, "\n".join(lines), {"trace": tr.to_json(), "truncated": tr.truncated})


def v_fixed(a, inp, budget):
    fs = fixed_polys(inp.endo(a.map), a.degree, budget)
    return Outcome(0, "\n".join(_p(f) for f in fs.basis), {"degree": a.degree, "basis": [_p(f) for f in fs.basis]})


def v_cor17(a, inp, budget):
    rep = cor17_consistency(inp.endo(a.map), a.degree, budget)
    data = {"verdict": rep.status.value}
    if rep.fixed is not None:
        data["fixed"] = _p(rep.fixed)
    if rep.status is Cor17Status.CONSISTENT:
        data["inverse"] = _endo_json(rep.inverse)
        return Outcome(0, f"consistent: fixes {_p(rep.fixed)}, inverse {rep.inverse}", data)
    if rep.status is Cor17Status.VIOLATION:
        return Outcome(4, f"THEOREM VIOLATION: fixes {_p(rep.fixed)} but not an automorphism", data)
    return Outcome(1, rep.status.value, data)


def v_random_tame(a, inp, budget):
    w = random_tame(a.seed, a.length, a.coeff_bound, a.deg_bound)
    e = w.endo(budget)
    return Outcome(0, str(e), {"word": w.to_json(), "endo": _endo_json(e)})


VERBS = {
    "parse": (v_parse, ["poly"]),
    "jacdet": (v_jacdet, ["map"]),
    "keller": (v_keller, ["map"]),
    "dependent": (v_dependent, ["p", "q"]),
    "gb": (v_gb, ["polys+"]),
    "member": (v_member, ["f", "gens+"]),
    "unimodular": (v_unimodular, ["p"]),
    "subalg": (v_subalg, ["f", "p", "q"]),
    "isauto": (v_isauto, ["map"]),
    "polygon": (v_polygon, ["p"]),
    "similar": (v_similar, ["p", "q"]),
    "thm13": (v_thm13, ["p", "q"]),
    "subduce": (v_subduce, ["f", "p"]),
    "amreduce": (v_amreduce, ["f", "g"]),
    "verify-retraction": (v_verify_retraction, ["map"]),
    "normalize": (v_normalize, ["map"]),
    "cor12": (v_cor12, ["p", "map"]),
    "cor31": (v_cor31, ["p"]),
    "cor14": (v_cor14, ["p"]),
    "trace": (v_trace, ["map"]),
    "fixed": (v_fixed, ["map"]),
    "cor17": (v_cor17, ["map"]),
    "random-tame": (v_random_tame, []),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--budget", type=int, default=DEFAULT_BUDGET.reduction_steps, help="reduction step cap")
    common.add_argument("--degree-cap", type=int, default=DEFAULT_BUDGET.degree_cap)
    common.add_argument("--basis-cap", type=int, default=DEFAULT_BUDGET.basis_cap)

    parser = argparse.ArgumentParser(prog="polyretract", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb, (_, args) in VERBS.items():
        sp = sub.add_parser(verb, parents=[common])
        for name in args:
            if name.endswith("+"):
                sp.add_argument(name[:-1], nargs="+")
            else:
                sp.add_argument(name)
        if verb in ("gb", "member"):
            sp.add_argument("--ring", default="x,y", help="comma-separated variables from x,y,P,Q")
        if verb == "gb":
            sp.add_argument("--order", choices=["grlex", "lex"], default="grlex")
        if verb == "trace":
            sp.add_argument("--kmax", type=int, default=3)
        if verb in ("fixed", "cor17"):
            sp.add_argument("--degree", type=int, default=2)
        if verb == "random-tame":
            sp.add_argument("--length", type=int, default=3)
            sp.add_argument("--coeff-bound", type=int, default=3)
            sp.add_argument("--deg-bound", type=int, default=2)
    return parser


def _emit(out, outcome: Outcome, as_json: bool):
    if as_json:
        payload = {"schema": SCHEMA, **outcome.data} if outcome.versioned else outcome.data
        out.write(json.dumps(payload, separators=(",", ":"), ensure_ascii=False) + "\n")
    else:
        out.write(outcome.text + "\n")


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            a = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    budget = replace(
        DEFAULT_BUDGET, degree_cap=a.degree_cap, basis_cap=a.basis_cap, reduction_steps=a.budget
    )
    func = VERBS[a.verb][0]
    try:
        outcome = func(a, _Inputs(stdin), budget)
    except ParseError as exc:
        stderr.write(f"parse error: {exc}\n")
        return 2
    except BudgetExceeded as exc:
        stderr.write(f"budget exceeded: {exc}\n")
        return 3
    except PolyError as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    except AssertionError as exc:
        stderr.write(f"internal self-check failed: {exc}\n")
        return 4
    _emit(stdout, outcome, a.json)
    return outcome.code


def main() -> None:
    sys.exit(run())
