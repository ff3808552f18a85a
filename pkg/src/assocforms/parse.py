"""Text and JSON input for forms and scalars.

Grammar (whitespace insensitive)::

    expr   := [+|-] term ((+|-) term)*
    term   := factor (['*'] factor | '/' factor)*
    factor := atom ['^' integer]
    atom   := integer | name | '(' expr ')'

Names are ``z1 .. zn`` (``x, y, z`` alias ``z1, z2, z3``), ``w`` for the cube
root of unity in ``qw`` mode, or parameter names in ``params`` mode.  When a
dual form is parsed, ``z1*`` is a single variable name.
"""
from __future__ import annotations

import json
import re

from .errors import DegreeMismatch, DomainMismatch, ParseError
from .forms import Form
from .poly import Poly
from .scalars import DOMAIN_PARAMS, DOMAIN_Q, DOMAIN_QW, DOMAINS, QQ, QOmega, normalize_scalar, qq

_ALIASES = {"x": 0, "y": 1, "z": 2}
_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str, dual: bool):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        if m.group(0).strip() == "":
            break
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            out.append(("num", int(m.group(1)), start))
        elif m.group(2) is not None:
            name = m.group(2)
            end = m.end()
            if dual and end < len(text) and text[end] == "*" and re.fullmatch(r"z\d+|[xyz]", name):
                name += "*"
                end += 1
            out.append(("name", name, start))
            pos = end
            continue
        else:
            out.append(("op", m.group(3), start))
        pos = m.end()
    out.append(("end", None, len(text)))
    return out


class _Parser:
    """Builds a sparse {exponent tuple: scalar} polynomial in the form variables."""

    def __init__(self, text, n, domain, dual):
        self.text = text
        self.n = n
        self.domain = domain
        self.dual = dual
        self.toks = _tokenize(text, dual)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2])

    # polynomial helpers
    def const(self, c):
        return {(0,) * self.n: c}

    def add(self, p, q, sign=1):
        out = dict(p)
        for k, v in q.items():
            s = out.get(k, 0) + (v if sign > 0 else -v)
            s = normalize_scalar(s) if not isinstance(s, int) else qq(s)
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return out

    def mul(self, p, q):
        out = {}
        for k1, v1 in p.items():
            for k2, v2 in q.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                s = out.get(k, 0) + v1 * v2
                s = normalize_scalar(s)
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return out

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty expression")
        p = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return p

    def expr(self):
        sign = 1
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            sign = -1 if t[1] == "-" else 1
        p = self.term()
        if sign < 0:
            p = {k: -v for k, v in p.items()}
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.take()
                q = self.term()
                p = self.add(p, q, -1 if t[1] == "-" else 1)
            else:
                return p

    def _starts_factor(self, t):
        return t[0] in ("num", "name") or (t[0] == "op" and t[1] == "(")

    def term(self):
        p = self.factor()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] == "*":
                self.take()
                p = self.mul(p, self.factor())
            elif t[0] == "op" and t[1] == "/":
                self.take()
                q = self.factor()
                if any(any(k) for k in q):
                    self.error("division by a polynomial in the form variables", t)
                c = q.get((0,) * self.n, 0)
                if not c:
                    self.error("division by zero", t)
                inv = QQ(1) / c
                p = {k: normalize_scalar(v * inv) for k, v in p.items()}
            elif self._starts_factor(t):
                p = self.mul(p, self.factor())
            else:
                return p

    def factor(self):
        base = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            e = self.take()
            if e[0] != "num":
                self.error("exponent must be a nonnegative integer", e)
            out = self.const(QQ(1))
            for _ in range(e[1]):
                out = self.mul(out, base)
            return out
        return base

    def atom(self):
        t = self.take()
        kind, val, pos = t
        if kind == "num":
            return self.const(QQ(val)) if val else {}
        if kind == "op" and val == "(":
            p = self.expr()
            close = self.take()
            if close[0] != "op" or close[1] != ")":
                self.error("expected ')'", close)
            return p
        if kind == "name":
            return self.name(val, t)
        self.error(f"unexpected {val!r}" if val is not None else "unexpected end of input", t)

    def name(self, val, tok):
        star = val.endswith("*")
        base = val[:-1] if star else val
        idx = None
        m = re.fullmatch(r"z(\d+)", base)
        if m:
            idx = int(m.group(1)) - 1
        elif base in _ALIASES and self.n <= 3:
            idx = _ALIASES[base]
        if idx is not None:
            if star != self.dual and star:
                self.error("dual variable in a primal form", tok)
            if not 0 <= idx < self.n:
                self.error(f"variable {val} out of range for n={self.n}", tok)
            exps = [0] * self.n
            exps[idx] = 1
            return {tuple(exps): QQ(1)}
        if val == "w":
            if self.domain != DOMAIN_QW:
                self.error("'w' is only available in the qw domain", tok)
            return self.const(QOmega(0, 1))
        if self.domain == DOMAIN_PARAMS:
            return self.const(Poly.gen(val))
        self.error(f"unknown name {val!r}", tok)


def _check_domain(domain):
    if domain not in DOMAINS:
        raise DomainMismatch(f"unknown scalar domain {domain!r}")


def parse_polynomial(text: str, n: int, domain: str = DOMAIN_Q, dual: bool = False) -> dict:
    _check_domain(domain)
    return _Parser(text, n, domain, dual).parse()


def parse_form(text: str, n: int, d=None, domain: str = DOMAIN_Q, dual=None) -> Form:
    """Parse a homogeneous form; ``d`` is inferred when omitted."""
    if dual is None:
        # a star glued to a variable and not followed by a factor marks z*
        dual = bool(re.search(r"(?:z\d+|\b[xyz])\*(?![\w(])", text))
    table = parse_polynomial(text, n, domain, dual)
    degrees = {sum(k) for k in table}
    if d is None:
        if len(degrees) > 1:
            raise DegreeMismatch(f"inhomogeneous input with degrees {sorted(degrees)}")
        d = degrees.pop() if degrees else 0
    bad = [k for k in table if sum(k) != d]
    if bad:
        raise DegreeMismatch(f"term of degree {sum(bad[0])} in a form of degree {d}")
    return Form(n, d, table, dual)


def parse_scalar(text: str, domain: str = DOMAIN_Q):
    table = parse_polynomial(str(text), 1, domain)
    if any(k != (0,) for k in table):
        raise ParseError("scalar expected", 0)
    return table.get((0,), QQ(0))


def form_from_document(doc) -> Form:
    """Form from ``{n, d, domain, coeffs: {"i1,i2,...": "p/q"}}`` (dict or JSON text)."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    n, d = int(doc["n"]), int(doc["d"])
    domain = doc.get("domain", DOMAIN_Q)
    _check_domain(domain)
    table = {}
    for key, val in doc.get("coeffs", {}).items():
        exps = tuple(int(x) for x in key.split(","))
        if len(exps) != n:
            raise ParseError(f"exponent key {key!r} has wrong length", None)
        if sum(exps) != d:
            raise DegreeMismatch(f"monomial {key!r} is not of degree {d}")
        table[exps] = parse_scalar(val, domain) if isinstance(val, str) else qq(val)
    return Form(n, d, table, bool(doc.get("dual", False)))


def form_to_document(f: Form) -> dict:
    from .poly import format_rational
    from .scalars import is_rational

    coeffs = {}
    for exps, c in f.items():
        coeffs[",".join(map(str, exps))] = format_rational(c) if is_rational(c) else str(c)
    return {"n": f.n, "d": f.d, "domain": f.domain(), "dual": f.dual, "coeffs": coeffs}


def serialize(f: Form) -> str:
    """Canonical text: graded lex term order, lowest-terms rationals."""
    return str(f)
