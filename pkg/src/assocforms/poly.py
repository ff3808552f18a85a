"""Sparse multivariate polynomials over Q in named parameters, and their fractions.

Exponent vectors are packed into a single Python int: one 16-bit field per
generator (first generator in the most significant field) under a total-degree
field.  Integer comparison of packed keys is then exactly graded lex order, and
monomial multiplication is integer addition.
"""
from __future__ import annotations

import re
from functools import lru_cache
from math import gcd

from .errors import NotDivisible
from .kernels import mul_terms
from .scalars import QQ, format_rational, is_rational, qq

WIDTH = 16
_FIELD = (1 << WIDTH) - 1
_GUARD = 1 << (WIDTH - 1)
MAX_EXPONENT = _GUARD - 1


@lru_cache(maxsize=None)
def _layout(nvars: int):
    shifts = tuple(WIDTH * (nvars - 1 - i) for i in range(nvars))
    guard = 0
    for s in shifts:
        guard |= _GUARD << s
    return shifts, WIDTH * nvars, guard


def pack(exps, nvars: int) -> int:
    shifts, dshift, _ = _layout(nvars)
    key = 0
    total = 0
    for e, s in zip(exps, shifts):
        if e < 0 or e > MAX_EXPONENT:
            raise OverflowError(f"exponent {e} out of range")
        key |= e << s
        total += e
    return key | (total << dshift)


def unpack(key: int, nvars: int) -> tuple:
    shifts, _, _ = _layout(nvars)
    return tuple((key >> s) & _FIELD for s in shifts)


def _natural_key(name: str):
    return tuple((0, int(p)) if p.isdigit() else (1, p) for p in re.findall(r"\d+|\D+", name))


def sort_gens(names) -> tuple:
    return tuple(sorted(set(names), key=_natural_key))


def _repack(terms: dict, old: tuple, new: tuple) -> dict:
    if old == new:
        return terms
    n_old, n_new = len(old), len(new)
    pos = [new.index(g) for g in old]
    out = {}
    for k, c in terms.items():
        exps = unpack(k, n_old)
        full = [0] * n_new
        for p, e in zip(pos, exps):
            full[p] = e
        out[pack(full, n_new)] = c
    return out


class Poly:
    """Immutable polynomial with rational coefficients in sorted named generators."""

    __slots__ = ("gens", "terms")

    def __init__(self, gens=(), terms=None):
        # terms keyed by exponent tuples aligned with ``gens``
        gens = tuple(gens)
        canon = sort_gens(gens)
        if len(canon) != len(gens):
            raise ValueError(f"repeated generator in {gens}")
        perm = [gens.index(g) for g in canon]
        packed = {}
        for exps, c in (terms or {}).items():
            c = qq(c)
            if c == 0:
                continue
            key = pack([exps[p] for p in perm], len(canon))
            s = packed.get(key, 0) + c
            if s:
                packed[key] = s
            else:
                packed.pop(key, None)
        self.gens = canon
        self.terms = packed

    @classmethod
    def _raw(cls, gens: tuple, terms: dict) -> "Poly":
        obj = object.__new__(cls)
        obj.gens = gens
        obj.terms = terms
        return obj

    @classmethod
    def gen(cls, name: str) -> "Poly":
        return cls._raw((name,), {pack((1,), 1): QQ(1)})

    @classmethod
    def gens_of(cls, *names):
        return tuple(cls.gen(n) for n in names)

    @classmethod
    def constant(cls, c) -> "Poly":
        c = qq(c)
        return cls._raw((), {0: c} if c else {})

    @classmethod
    def zero(cls) -> "Poly":
        return cls._raw((), {})

    # -- structure -----------------------------------------------------------
    def _align(self, other: "Poly"):
        if self.gens == other.gens:
            return self.gens, self.terms, other.terms
        gens = sort_gens(self.gens + other.gens)
        return gens, _repack(self.terms, self.gens, gens), _repack(other.terms, other.gens, gens)

    def with_gens(self, gens) -> "Poly":
        gens = sort_gens(tuple(gens) + self.gens)
        return Poly._raw(gens, _repack(self.terms, self.gens, gens))

    def used_gens(self) -> tuple:
        used = set()
        for exps in self.exponents():
            used.update(g for g, e in zip(self.gens, exps) if e)
        return sort_gens(used)

    def trimmed(self) -> "Poly":
        used = self.used_gens()
        if used == self.gens:
            return self
        idx = [self.gens.index(g) for g in used]
        terms = {}
        for k, c in self.terms.items():
            exps = unpack(k, len(self.gens))
            terms[pack([exps[i] for i in idx], len(used))] = c
        return Poly._raw(used, terms)

    def exponents(self):
        n = len(self.gens)
        return (unpack(k, n) for k in self.terms)

    def items(self):
        """(exponent tuple, coefficient) pairs in descending graded lex order."""
        n = len(self.gens)
        return [(unpack(k, n), self.terms[k]) for k in sorted(self.terms, reverse=True)]

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and 0 in self.terms)

    def constant_value(self):
        return self.terms.get(0, QQ(0))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(self.terms) >> _layout(len(self.gens))[1]

    def degree_in(self, name: str) -> int:
        if name not in self.gens:
            return 0
        i = self.gens.index(name)
        return max((e[i] for e in self.exponents()), default=0)

    def is_homogeneous(self) -> bool:
        dshift = _layout(len(self.gens))[1]
        return len({k >> dshift for k in self.terms}) <= 1

    def leading_key(self) -> int:
        return max(self.terms)

    def leading_coefficient(self):
        return self.terms[max(self.terms)] if self.terms else QQ(0)

    def __len__(self):
        return len(self.terms)

    # -- arithmetic ----------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, Poly):
            gens, t1, t2 = self._align(other)
            if len(t1) < len(t2):
                t1, t2 = t2, t1
            res = dict(t1)
            for k, c in t2.items():
                v = res.get(k)
                if v is None:
                    res[k] = c
                else:
                    s = v + c
                    if s:
                        res[k] = s
                    else:
                        del res[k]
            return Poly._raw(gens, res)
        if is_rational(other):
            if not other:
                return self
            res = dict(self.terms)
            s = res.get(0, 0) + other
            if s:
                res[0] = QQ(s)
            else:
                res.pop(0, None)
            return Poly._raw(self.gens, res)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.gens, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, Poly) or is_rational(other):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if is_rational(other):
            return (-self) + other
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Poly):
            gens, t1, t2 = self._align(other)
            return Poly._raw(gens, mul_terms(t1, t2))
        if is_rational(other):
            if not other:
                return Poly._raw(self.gens, {})
            other = qq(other)
            return Poly._raw(self.gens, {k: c * other for k, c in self.terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly._raw(self.gens, {0: QQ(1)})
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if is_rational(other):
            return self * (QQ(1) / qq(other))
        if isinstance(other, Poly):
            if other.is_constant():
                return self * (QQ(1) / other.constant_value())
            return RatFunc.make(self, other)
        if isinstance(other, RatFunc):
            return RatFunc.make(self * other.den, other.num)
        return NotImplemented

    def __rtruediv__(self, other):
        if is_rational(other):
            return RatFunc.make(Poly.constant(other), self)
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, Poly):
            _, t1, t2 = self._align(other)
            return t1 == t2
        if is_rational(other):
            if other == 0:
                return not self.terms
            return len(self.terms) == 1 and self.terms.get(0) == other
        return NotImplemented

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant_value())
        t = self.trimmed()
        return hash((t.gens, frozenset(t.terms.items())))

    # -- division ------------------------------------------------------------
    def exact_div(self, other) -> "Poly":
        """Quotient ``self / other``; raises :class:`NotDivisible` when inexact."""
        if is_rational(other):
            return self * (QQ(1) / qq(other))
        if not other.terms:
            raise ZeroDivisionError("polynomial division by zero")
        if other.is_constant():
            return self * (QQ(1) / other.constant_value())
        if not self.terms:
            return Poly._raw(self.gens, {})
        gens, rem, dv = self._align(other)
        rem = dict(rem)
        guard = _layout(len(gens))[2]
        lk = max(dv)
        lc = dv[lk]
        rest = [(k, c) for k, c in dv.items() if k != lk]
        quot = {}
        while rem:
            k = max(rem)
            diff = k - lk
            if diff < 0 or diff & guard:
                raise NotDivisible("polynomial division is not exact")
            qc = rem.pop(k) / lc
            quot[diff] = qc
            for kk, cc in rest:
                key = kk + diff
                v = rem.get(key)
                if v is None:
                    rem[key] = -qc * cc
                else:
                    s = v - qc * cc
                    if s:
                        rem[key] = s
                    else:
                        del rem[key]
        return Poly._raw(gens, quot)

    def divides(self, other: "Poly") -> bool:
        try:
            other.exact_div(self)
        except NotDivisible:
            return False
        return True

    def content(self):
        """Positive rational c with self/c integral and primitive (leading coeff > 0)."""
        if not self.terms:
            return QQ(0)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, int(c.numerator))
            den = den * int(c.denominator) // gcd(den, int(c.denominator))
        c = QQ(num, den)
        return c if self.leading_coefficient() > 0 else -c

    def primitive(self) -> "Poly":
        return self / self.content() if self.terms else self

    def monic(self) -> "Poly":
        return self / self.leading_coefficient() if self.terms else self

    def monomial_content(self) -> tuple:
        """Exponentwise minimum over all terms (the largest monomial factor)."""
        exps = list(self.exponents())
        if not exps:
            return (0,) * len(self.gens)
        return tuple(min(col) for col in zip(*exps))

    # -- calculus and substitution -------------------------------------------
    def diff(self, name: str) -> "Poly":
        if name not in self.gens:
            return Poly._raw(self.gens, {})
        i = self.gens.index(name)
        n = len(self.gens)
        shifts, dshift, _ = _layout(n)
        step = (1 << shifts[i]) + (1 << dshift)
        res = {}
        for k, c in self.terms.items():
            e = (k >> shifts[i]) & _FIELD
            if e:
                res[k - step] = c * e
        return Poly._raw(self.gens, res)

    def subs(self, mapping: dict):
        """Substitute values (scalars, Poly, RatFunc, QOmega) for some generators."""
        idx = [i for i, g in enumerate(self.gens) if g in mapping]
        if not idx:
            return self
        keep = [i for i, g in enumerate(self.gens) if g not in mapping]
        keep_gens = tuple(self.gens[i] for i in keep)
        vals = [mapping[self.gens[i]] for i in idx]
        powers = [dict() for _ in idx]
        n = len(self.gens)
        groups = {}
        for k, c in self.terms.items():
            exps = unpack(k, n)
            val = c
            for j, i in enumerate(idx):
                e = exps[i]
                if e:
                    p = powers[j].get(e)
                    if p is None:
                        p = vals[j] ** e
                        powers[j][e] = p
                    val = val * p
            kk = pack([exps[i] for i in keep], len(keep)) if keep else 0
            prev = groups.get(kk)
            groups[kk] = val if prev is None else prev + val
        if not keep:
            total = groups.get(0, QQ(0))
            return total
        out = QQ(0)
        for kk, val in groups.items():
            mono = Poly._raw(keep_gens, {kk: QQ(1)})
            out = out + mono * val
        return out

    def evaluate(self, mapping: dict):
        return self.subs(mapping)

    # -- univariate gcd ------------------------------------------------------
    def _univariate_parts(self):
        t = self.trimmed()
        if len(t.gens) > 1:
            return None
        name = t.gens[0] if t.gens else None
        coeffs = {}
        for exps, c in t.items():
            coeffs[exps[0] if exps else 0] = c
        return name, coeffs

    @staticmethod
    def gcd_univariate(a: "Poly", b: "Poly") -> "Poly":
        """Monic gcd of two polynomials in (at most) one common generator."""
        pa, pb = a._univariate_parts(), b._univariate_parts()
        if pa is None or pb is None:
            raise ValueError("not univariate")
        names = {x for x in (pa[0], pb[0]) if x is not None}
        if len(names) > 1:
            return Poly.constant(1)
        name = names.pop() if names else None
        x = [pa[1], pb[1]]
        dense = []
        for d in x:
            deg = max(d) if d else -1
            dense.append([d.get(i, QQ(0)) for i in range(deg + 1)])
        u, v = dense
        while v and any(v):
            while v and v[-1] == 0:
                v.pop()
            if not v:
                break
            r = list(u)
            while len(r) >= len(v) and any(r):
                while r and r[-1] == 0:
                    r.pop()
                if len(r) < len(v):
                    break
                f = r[-1] / v[-1]
                off = len(r) - len(v)
                for i, cv in enumerate(v):
                    r[off + i] -= f * cv
                r.pop()
            while r and r[-1] == 0:
                r.pop()
            u, v = v, r
        while u and u[-1] == 0:
            u.pop()
        if not u:
            return Poly.constant(0)
        lc = u[-1]
        if name is None or len(u) == 1:
            return Poly.constant(1)
        return Poly((name,), {(i,): c / lc for i, c in enumerate(u) if c})

    # -- printing ------------------------------------------------------------
    def __str__(self):
        return format_terms(
            [(_monomial_text(self.gens, exps), c) for exps, c in self.items()]
        )

    def __repr__(self):
        return f"Poly({str(self)!r})"


def _monomial_text(names, exps) -> str:
    parts = []
    for name, e in zip(names, exps):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return " ".join(parts)


def format_coefficient(c) -> str:
    """Coefficient text for a term; compound values are parenthesized."""
    if is_rational(c):
        c = qq(c)
        return str(c.numerator) if c.denominator == 1 else f"({format_rational(c)})"
    text = str(c)
    if isinstance(c, Poly) and len(c.terms) == 1 and 0 in c.terms:
        return format_coefficient(c.constant_value())
    return f"({text})"


def format_terms(terms) -> str:
    """Join ``(monomial text, coefficient)`` pairs into canonical '+'/'-' text."""
    out = []
    for mono, c in terms:
        neg = False
        if is_rational(c) and c < 0:
            neg = True
            c = -c
        ctext = "" if (is_rational(c) and c == 1 and mono) else format_coefficient(c)
        body = " ".join(p for p in (ctext, mono) if p)
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append(("- " if neg else "+ ") + body)
    return " ".join(out) if out else "0"


class RatFunc:
    """Element of Q(params) that is not a polynomial: ``num/den`` with den non-constant."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        self.num = num
        self.den = den

    @staticmethod
    def make(num, den):
        if is_rational(num):
            num = Poly.constant(num)
        if is_rational(den):
            den = Poly.constant(den)
        if not den.terms:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num.terms:
            return Poly.zero()
        if den.is_constant():
            return num / den.constant_value()
        try:
            return num.exact_div(den)
        except NotDivisible:
            pass
        num, den = num.trimmed(), den.trimmed()
        if len(set(num.gens) | set(den.gens)) == 1:
            g = Poly.gcd_univariate(num, den)
            if not g.is_constant():
                num = num.exact_div(g)
                den = den.exact_div(g)
        else:
            gens, tn, td = num._align(den)
            mn = Poly._raw(gens, tn).monomial_content()
            md = Poly._raw(gens, td).monomial_content()
            common = tuple(min(a, b) for a, b in zip(mn, md))
            if any(common):
                mono = Poly((gens), {common: 1})
                num = Poly._raw(gens, tn).exact_div(mono)
                den = Poly._raw(gens, td).exact_div(mono)
            try:
                q = den.exact_div(num)
            except NotDivisible:
                q = None
            if q is not None:
                lc = num.leading_coefficient()
                num = Poly.constant(1)
                den = q
                num, den = num * lc, den * lc
        if den.is_constant():
            return num / den.constant_value()
        lc = den.leading_coefficient()
        return RatFunc(num / lc, den / lc)

    @staticmethod
    def _parts(x):
        if isinstance(x, RatFunc):
            return x.num, x.den
        if isinstance(x, Poly):
            return x, Poly.constant(1)
        if is_rational(x):
            return Poly.constant(x), Poly.constant(1)
        return None

    def __add__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        n2, d2 = p
        if d2 == self.den:
            return RatFunc.make(self.num + n2, self.den)
        return RatFunc.make(self.num * d2 + n2 * self.den, self.den * d2)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self + RatFunc(-p[0], p[1]) if not p[1].is_constant() else self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        n2, d2 = p
        return RatFunc.make(self.num * n2, self.den * d2)

    __rmul__ = __mul__

    def __truediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        n2, d2 = p
        if not n2.terms:
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc.make(self.num * d2, self.den * n2)

    def __rtruediv__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return RatFunc.make(p[0] * self.den, p[1] * self.num)

    def __pow__(self, k: int):
        if k < 0:
            return RatFunc.make(self.den ** (-k), self.num ** (-k))
        return RatFunc.make(self.num**k, self.den**k)

    def __eq__(self, other):
        p = self._parts(other)
        if p is None:
            return NotImplemented
        return self.num * p[1] == p[0] * self.den

    def __hash__(self):
        return hash((hash(self.num), hash(self.den)))

    def __bool__(self):
        return bool(self.num.terms)

    def subs(self, mapping):
        num = self.num.subs(mapping)
        den = self.den.subs(mapping)
        return num / den

    def __str__(self):
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc({str(self)!r})"
