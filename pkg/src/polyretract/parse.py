"""Text syntax for polynomials and mappings.

Grammar (whitespace is ignored)::

    expr    := term (("+" | "-") term)*
    term    := unary ("*" unary)*
    unary   := "-" unary | power
    power   := atom ("^" INT)?
    atom    := INT ("/" INT)? | NAME | "(" expr ")"

``^`` binds tighter than unary minus, so ``-x^2`` is ``-(x^2)``.  Implicit
multiplication (``2x``) is a syntax error.  Mappings are written
``"x -> <expr>; y -> <expr>"``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .polycore import XY, Poly, PolyError, grlex_key

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(->|[-+*^/();]))")


class ParseError(PolyError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
        self.reason = message


def _tokenize(text: str):
    toks = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            toks.append(("int", m.group(1), start))
        elif m.group(2) is not None:
            toks.append(("name", m.group(2), start))
        else:
            toks.append((m.group(3), m.group(3), start))
        pos = m.end()
    toks.append(("end", "", n))
    return toks


class _Parser:
    def __init__(self, text: str, ring: Sequence[str]):
        self.toks = _tokenize(text)
        self.i = 0
        self.ring = tuple(ring)

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str):
        tok = self.take()
        if tok[0] != kind:
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"expected {kind!r}, found {what}", tok[2])
        return tok

    def expr(self) -> Poly:
        acc = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Poly:
        acc = self.unary()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.unary()
        return acc

    def unary(self) -> Poly:
        if self.peek()[0] == "-":
            self.take()
            return -self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.peek()[0] != "^":
            return base
        self.take()
        tok = self.peek()
        if tok[0] == "-":
            raise ParseError("negative exponent", tok[2])
        if tok[0] != "int":
            what = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ParseError(f"exponent must be a non-negative integer, found {what}", tok[2])
        self.take()
        if self.peek()[0] == "/" and self.toks[self.i + 1][0] == "int":
            raise ParseError("fractional exponent", tok[2])
        return base ** int(tok[1])

    def atom(self) -> Poly:
        tok = self.take()
        kind, val, pos = tok
        if kind == "int":
            num = int(val)
            if self.peek()[0] == "/":
                self.take()
                den_tok = self.expect("int")
                den = int(den_tok[1])
                if den == 0:
                    raise ParseError("zero denominator", den_tok[2])
                return Poly.const(Fraction(num, den), self.ring)
            return Poly.const(num, self.ring)
        if kind == "name":
            if val not in self.ring:
                raise ParseError(f"unknown variable {val!r}", pos)
            return Poly.var(val, self.ring)
        if kind == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        what = "end of input" if kind == "end" else repr(val)
        raise ParseError(f"unexpected {what}", pos)


def parse_poly(src: str, ring: Sequence[str] = XY) -> Poly:
    """Parse ``src`` into a canonical :class:`Poly` over ``ring``."""
    p = _Parser(src, ring)
    result = p.expr()
    tok = p.peek()
    if tok[0] != "end":
        raise ParseError(f"unexpected {tok[1]!r}", tok[2])
    return result


def _fmt_coeff(c) -> str:
    c = Fraction(c)
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def print_poly(f: Poly, names: dict | None = None) -> str:
    """Deterministic text form, terms in descending graded-lex order."""
    if f.is_zero():
        return "0"
    names = names or {}
    vars = [names.get(v, v) for v in f.vars]
    out = []
    for e, c in sorted(f.terms.items(), key=lambda kv: grlex_key(kv[0]), reverse=True):
        neg = c < 0
        a = -c if neg else c
        factors = []
        for v, k in zip(vars, e):
            if k == 1:
                factors.append(v)
            elif k > 1:
                factors.append(f"{v}^{k}")
        if not factors:
            body = _fmt_coeff(a)
        elif a == 1:
            body = "*".join(factors)
        else:
            body = _fmt_coeff(a) + "*" + "*".join(factors)
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def parse_mapping(src: str):
    """Parse ``"x -> f; y -> g"`` into the image pair ``(f, g)``.

    Both assignments are required; their order in the text is free.
    """
    images = {}
    offset = 0
    for part in src.split(";"):
        start = offset
        offset += len(part) + 1
        if not part.strip():
            continue
        if "->" not in part:
            raise ParseError("expected 'var -> expr'", start + len(part) - len(part.lstrip()))
        lhs, rhs = part.split("->", 1)
        name = lhs.strip()
        if name not in XY:
            raise ParseError(f"mapping target must be x or y, found {name!r}", start)
        if name in images:
            raise ParseError(f"duplicate image for {name}", start)
        rhs_start = start + len(lhs) + 2
        try:
            images[name] = parse_poly(rhs, XY)
        except ParseError as exc:
            raise ParseError(exc.reason, rhs_start + exc.offset) from None
    missing = [v for v in XY if v not in images]
    if missing:
        raise ParseError(f"missing image for {missing[0]}", len(src))
    return images["x"], images["y"]


def print_mapping(img_x: Poly, img_y: Poly) -> str:
    return f"x -> {print_poly(img_x)}; y -> {print_poly(img_y)}"
