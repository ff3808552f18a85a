"""Exact scalar domains: the rationals and the cyclotomic field Q(w), w^2 + w + 1 = 0.

The third domain, rational functions in named parameters, lives in
:mod:`assocforms.poly` (``Poly`` for the polynomial subring, ``RatFunc`` for
genuine fractions).  :func:`domain_of` classifies any scalar.
"""
from __future__ import annotations

from fractions import Fraction

try:
    from gmpy2 import mpq as _mpq
    from gmpy2 import mpz as _mpz

    HAVE_GMPY2 = True
except ImportError:  # pragma: no cover - exercised only without gmpy2
    _mpq = Fraction
    _mpz = int
    HAVE_GMPY2 = False

QQ = _mpq
_RATIONAL_TYPES = (int, Fraction) + ((type(_mpq(0)), type(_mpz(0))) if HAVE_GMPY2 else ())

DOMAIN_Q = "q"
DOMAIN_QW = "qw"
DOMAIN_PARAMS = "params"
DOMAINS = (DOMAIN_Q, DOMAIN_QW, DOMAIN_PARAMS)


def qq(value, den=None):
    """Coerce ``value`` (int, str "p/q", Fraction, mpq) to the rational type."""
    if den is not None:
        return QQ(value, den)
    if isinstance(value, str):
        return QQ(Fraction(value.strip()))
    return QQ(value)


def is_rational(x) -> bool:
    return isinstance(x, _RATIONAL_TYPES) and not isinstance(x, bool)


def format_rational(x) -> str:
    x = qq(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


class QOmega:
    """Element a + b*w of Q(w), with w a primitive cube root of unity."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = qq(a)
        self.b = qq(b)

    @classmethod
    def omega(cls):
        return cls(0, 1)

    @staticmethod
    def _coerce(other):
        if isinstance(other, QOmega):
            return other
        if is_rational(other):
            return QOmega(other, 0)
        return None

    def simplify(self):
        """Return a plain rational when the w-part vanishes."""
        return self.a if self.b == 0 else self

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QOmega(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QOmega(-self.a, -self.b)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QOmega(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        # w^2 = -1 - w
        ac = self.a * o.a
        bd = self.b * o.b
        return QOmega(ac - bd, self.a * o.b + self.b * o.a - bd)

    __rmul__ = __mul__

    def conjugate(self):
        return QOmega(self.a - self.b, -self.b)

    def norm(self):
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inverse(self):
        nrm = self.norm()
        if nrm == 0:
            raise ZeroDivisionError("division by zero in Q(w)")
        c = self.conjugate()
        return QOmega(c.a / nrm, c.b / nrm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = QOmega(1, 0)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __repr__(self):
        return f"QOmega({format_rational(self.a)}, {format_rational(self.b)})"

    def __str__(self):
        if self.b == 0:
            return format_rational(self.a)
        parts = []
        if self.a != 0:
            parts.append(format_rational(self.a))
        b = self.b
        if b == 1:
            w = "w"
        elif b == -1:
            w = "-w"
        else:
            w = f"{format_rational(b)} w"
        if parts:
            parts.append(("- " + w[1:]) if w.startswith("-") else ("+ " + w))
        else:
            parts.append(w)
        return " ".join(parts)


def domain_of(x) -> str:
    """Classify a scalar as one of ``q``, ``qw`` or ``params``."""
    if is_rational(x):
        return DOMAIN_Q
    if isinstance(x, QOmega):
        return DOMAIN_Q if x.b == 0 else DOMAIN_QW
    from .poly import Poly, RatFunc

    if isinstance(x, Poly):
        return DOMAIN_Q if x.is_constant() else DOMAIN_PARAMS
    if isinstance(x, RatFunc):
        return DOMAIN_PARAMS
    raise TypeError(f"not a scalar: {x!r}")


def join_domains(d1: str, d2: str) -> str:
    from .errors import DomainMismatch

    if d1 == d2 or d2 == DOMAIN_Q:
        return d1
    if d1 == DOMAIN_Q:
        return d2
    raise DomainMismatch(f"cannot combine scalars from {d1!r} and {d2!r}")


def exact_div(a, b):
    """Division that must be exact in the ambient ring (rationals, Q(w), Q[params])."""
    from .poly import Poly

    if isinstance(a, Poly):
        if isinstance(b, Poly):
            return a.exact_div(b)
        return a / b
    if isinstance(b, Poly):
        if b.is_constant():
            return a / b.constant_value()
        if a == 0:
            return QQ(0)
        return Poly.constant(a).exact_div(b)
    return a / b


def normalize_scalar(x):
    """Collapse trivial representatives (constant Poly, w-free QOmega, int) to QQ."""
    from .poly import Poly

    if isinstance(x, QOmega):
        return x.a if x.b == 0 else x
    if isinstance(x, Poly):
        return x.constant_value() if x.is_constant() else x
    if isinstance(x, int) or isinstance(x, Fraction):
        return qq(x)
    return x
