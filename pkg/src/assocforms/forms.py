"""Homogeneous forms, linear changes of variables, apolarity and the hat/tilde maps.

Variable indices are 0-based throughout the Python API: ``partial_derivative(f, 0)``
differentiates with respect to z1.
"""
from __future__ import annotations

from math import comb, factorial

from .errors import (
    DegreeMismatch,
    DomainMismatch,
    IncompatibleRadicalScale,
    SingularMatrix,
    WrongArity,
)
from .poly import format_terms
from .scalars import QQ, DOMAIN_Q, domain_of, join_domains, normalize_scalar, qq


def monomial_basis(n: int, e: int) -> list:
    """Exponent tuples of degree ``e`` in ``n`` variables, in graded lex order (z1 first)."""
    if n < 1 or e < 0:
        raise ValueError("need n >= 1 and e >= 0")
    if n == 1:
        return [(e,)]
    out = []
    for first in range(e, -1, -1):
        for rest in monomial_basis(n - 1, e - first):
            out.append((first,) + rest)
    return out


def basis_size(n: int, e: int) -> int:
    return comb(e + n - 1, e) if e >= 0 else 0


def multinomial(exps) -> int:
    out = factorial(sum(exps))
    for e in exps:
        out //= factorial(e)
    return out


def exp_factorial(exps) -> int:
    out = 1
    for e in exps:
        out *= factorial(e)
    return out


def _add_exps(a, b):
    return tuple(x + y for x, y in zip(a, b))


class Form:
    """Homogeneous polynomial of degree ``d`` in ``n`` variables (z, or z* when dual)."""

    __slots__ = ("n", "d", "dual", "coeffs")

    def __init__(self, n: int, d: int, coeffs=None, dual: bool = False):
        self.n = n
        self.d = d
        self.dual = bool(dual)
        table = {}
        for exps, c in (coeffs or {}).items():
            exps = tuple(exps)
            if len(exps) != n:
                raise ValueError(f"exponent {exps} has wrong length for n={n}")
            if sum(exps) != d:
                raise DegreeMismatch(f"monomial {exps} is not of degree {d}")
            c = normalize_scalar(c)
            if c:
                table[exps] = c
        self.coeffs = table

    @classmethod
    def _raw(cls, n, d, table, dual=False):
        obj = object.__new__(cls)
        obj.n = n
        obj.d = d
        obj.dual = dual
        obj.coeffs = table
        return obj

    @classmethod
    def zero(cls, n, d, dual=False):
        return cls._raw(n, d, {}, dual)

    @classmethod
    def monomial(cls, exps, coeff=1, dual=False):
        exps = tuple(exps)
        return cls(len(exps), sum(exps), {exps: coeff}, dual)

    # -- inspection ----------------------------------------------------------
    def coeff(self, exps):
        return self.coeffs.get(tuple(exps), QQ(0))

    def __getitem__(self, exps):
        return self.coeff(exps)

    def monomials(self) -> list:
        return sorted(self.coeffs, reverse=True)

    def items(self) -> list:
        return [(m, self.coeffs[m]) for m in self.monomials()]

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def domain(self) -> str:
        dom = DOMAIN_Q
        for c in self.coeffs.values():
            dom = join_domains(dom, domain_of(c))
        return dom

    def coefficient_vector(self, basis=None) -> list:
        basis = basis if basis is not None else monomial_basis(self.n, self.d)
        return [self.coeffs.get(m, QQ(0)) for m in basis]

    @classmethod
    def from_vector(cls, n, d, vec, basis=None, dual=False):
        basis = basis if basis is not None else monomial_basis(n, d)
        return cls(n, d, dict(zip(basis, vec)), dual)

    def map_coeffs(self, fn) -> "Form":
        return Form(self.n, self.d, {m: fn(c) for m, c in self.coeffs.items()}, self.dual)

    def subs_params(self, mapping) -> "Form":
        """Substitute values for parameters appearing in the coefficients."""

        def sub(c):
            return c.subs(mapping) if hasattr(c, "subs") else c

        return self.map_coeffs(sub)

    def as_dual(self) -> "Form":
        """Same coefficient table read in the dual variables z*."""
        return Form._raw(self.n, self.d, dict(self.coeffs), True)

    def as_primal(self) -> "Form":
        """Same coefficient table read in the variables z."""
        return Form._raw(self.n, self.d, dict(self.coeffs), False)

    def evaluate(self, point):
        total = QQ(0)
        for exps, c in self.coeffs.items():
            term = c
            for x, e in zip(point, exps):
                if e:
                    term = term * x**e
            total = total + term
        return normalize_scalar(total)

    # -- arithmetic ----------------------------------------------------------
    def _check_same_space(self, other):
        if self.n != other.n or self.dual != other.dual:
            raise DomainMismatch("forms live in different variable spaces")
        join_domains(self.domain(), other.domain())

    def __add__(self, other):
        if not isinstance(other, Form):
            if other == 0:
                return self
            return NotImplemented
        self._check_same_space(other)
        if self.d != other.d:
            if not other.coeffs:
                return self
            if not self.coeffs:
                return other
            raise DegreeMismatch(f"cannot add forms of degrees {self.d} and {other.d}")
        table = dict(self.coeffs)
        for m, c in other.coeffs.items():
            v = table.get(m)
            s = c if v is None else normalize_scalar(v + c)
            if s:
                table[m] = s
            else:
                table.pop(m, None)
        return Form._raw(self.n, self.d, table, self.dual)

    def __radd__(self, other):
        if other == 0:
            return self
        return NotImplemented

    def __neg__(self):
        return Form._raw(self.n, self.d, {m: -c for m, c in self.coeffs.items()}, self.dual)

    def __sub__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Form):
            self._check_same_space(other)
            table = {}
            for m1, c1 in self.coeffs.items():
                for m2, c2 in other.coeffs.items():
                    m = _add_exps(m1, m2)
                    v = table.get(m)
                    table[m] = c1 * c2 if v is None else v + c1 * c2
            return Form(self.n, self.d + other.d, table, self.dual)
        other = normalize_scalar(other)
        if not other:
            return Form.zero(self.n, self.d, self.dual)
        table = {}
        for m, c in self.coeffs.items():
            v = normalize_scalar(c * other)
            if v:
                table[m] = v
        return Form._raw(self.n, self.d, table, self.dual)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        return self * (QQ(1) / other)

    def __pow__(self, k: int):
        result = Form(self.n, 0, {(0,) * self.n: 1}, self.dual)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        if (self.n, self.dual) != (other.n, other.dual):
            return False
        if self.d != other.d:
            return not self.coeffs and not other.coeffs
        if self.coeffs.keys() != other.coeffs.keys():
            return False
        return all(self.coeffs[m] == other.coeffs[m] for m in self.coeffs)

    __hash__ = None

    # -- text ----------------------------------------------------------------
    def variable_names(self) -> list:
        star = "*" if self.dual else ""
        return [f"z{i + 1}{star}" for i in range(self.n)]

    def __str__(self):
        names = self.variable_names()
        terms = []
        for exps, c in self.items():
            parts = []
            for name, e in zip(names, exps):
                if e == 1:
                    parts.append(name)
                elif e:
                    parts.append(f"{name}^{e}")
            terms.append((" ".join(parts), c))
        return format_terms(terms)

    def __repr__(self):
        kind = "DualForm" if self.dual else "Form"
        return f"<{kind} n={self.n} d={self.d}: {self}>"


def variable(n: int, i: int, dual: bool = False) -> Form:
    exps = [0] * n
    exps[i] = 1
    return Form.monomial(exps, 1, dual)


def linear_form(coeffs, dual: bool = False) -> Form:
    n = len(coeffs)
    table = {}
    for i, c in enumerate(coeffs):
        exps = [0] * n
        exps[i] = 1
        table[tuple(exps)] = c
    return Form(n, 1, table, dual)


# -- calculus -----------------------------------------------------------------
def partial_derivative(f: Form, i: int) -> Form:
    if not 0 <= i < f.n:
        raise IndexError(f"variable index {i} out of range for n={f.n}")
    if f.d == 0:
        return Form.zero(f.n, 0, f.dual)
    table = {}
    for exps, c in f.coeffs.items():
        e = exps[i]
        if e:
            m = exps[:i] + (e - 1,) + exps[i + 1:]
            table[m] = c * e
    return Form._raw(f.n, f.d - 1, table, f.dual)


def gradient(f: Form) -> list:
    return [partial_derivative(f, i) for i in range(f.n)]


def _det_forms(rows):
    # Laplace expansion along the first row; fine for the n <= 4 used here.
    k = len(rows)
    if k == 1:
        return rows[0][0]
    total = None
    for j in range(k):
        entry = rows[0][j]
        if not entry:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = entry * _det_forms(minor)
        if j % 2:
            term = -term
        total = term if total is None else total + term
    if total is None:
        n, d = rows[0][0].n, sum(r[i].d for i, r in enumerate(rows))
        return Form.zero(n, d, rows[0][0].dual)
    return total


def hessian(f: Form) -> Form:
    """Determinant of the matrix of second partials, a form of degree n(d-2)."""
    if f.d < 2:
        raise ValueError("the Hessian needs degree >= 2")
    grad = gradient(f)
    second = [[partial_derivative(g, j) for j in range(f.n)] for g in grad]
    h = _det_forms(second)
    if h.d != f.n * (f.d - 2):
        h = Form.zero(f.n, f.n * (f.d - 2), f.dual)
    return h


def euler_residual(f: Form) -> Form:
    """sum_i z_i df/dz_i - d f, which vanishes for every form."""
    out = Form.zero(f.n, f.d, f.dual)
    for i in range(f.n):
        out = out + variable(f.n, i, f.dual) * partial_derivative(f, i)
    return out - f * f.d


# -- linear substitutions -------------------------------------------------------
def substitute_linear(f: Form, N, dual=None) -> Form:
    """f(N z): variable z_i is replaced by sum_j N[i][j] z_j."""
    n = f.n
    dual = f.dual if dual is None else dual
    lins = [linear_form([N[i][j] for j in range(n)], dual) for i in range(n)]
    powers = [{0: Form(n, 0, {(0,) * n: 1}, dual)} for _ in range(n)]

    def power(i, e):
        cache = powers[i]
        if e not in cache:
            k = max(cache)
            p = cache[k]
            for j in range(k + 1, e + 1):
                p = p * lins[i]
                cache[j] = p
        return cache[e]

    table = {}
    for exps, c in f.coeffs.items():
        term = None
        for i, e in enumerate(exps):
            if e:
                term = power(i, e) if term is None else term * power(i, e)
        if term is None:
            term = powers[0][0]
        for m, v in term.coeffs.items():
            x = table.get(m)
            table[m] = c * v if x is None else x + c * v
    return Form(n, f.d, table, dual)


class LinearMap:
    """The matrix M/s, where the optional radical scale s satisfies s**m = r."""

    __slots__ = ("matrix", "r", "m", "_det", "_inv")

    def __init__(self, matrix, radical=None):
        from .linalg.matrix import Matrix

        M = matrix if isinstance(matrix, Matrix) else Matrix(matrix)
        if not M.is_square():
            raise SingularMatrix("linear map must be square")
        self.matrix = M
        if radical is None:
            self.r, self.m = QQ(1), 1
        else:
            r, m = radical
            self.r, self.m = normalize_scalar(qq(r) if isinstance(r, (int, str)) else r), int(m)
        self._det = None
        self._inv = None

    @classmethod
    def identity(cls, n):
        from .linalg.matrix import Matrix

        return cls(Matrix.identity(n))

    @property
    def n(self):
        return self.matrix.rows

    def det_matrix(self):
        if self._det is None:
            from .linalg.matrix import determinant

            self._det = determinant(self.matrix)
        return self._det

    def inverse_matrix(self):
        if self._inv is None:
            from .linalg.matrix import inverse

            if not self.det_matrix():
                raise SingularMatrix("linear map is singular")
            self._inv = inverse(self.matrix)
        return self._inv

    def scale_power(self, e: int):
        """s**e, which must be an element of the scalar domain."""
        if e % self.m:
            raise IncompatibleRadicalScale(
                f"scale with s^{self.m} = {self.r} cannot be raised to the power {e} exactly"
            )
        return normalize_scalar(self.r ** (e // self.m)) if e >= 0 else normalize_scalar(
            QQ(1) / self.r ** ((-e) // self.m)
        )

    def det(self):
        """det(M/s) = det(M) / s**n."""
        return normalize_scalar(self.det_matrix() / self.scale_power(self.n))

    def compose(self, other: "LinearMap") -> "LinearMap":
        """The product self * other (apply other first)."""
        if self.m == other.m:
            r, m = self.r * other.r, self.m
        elif self.m == 1:
            r, m = other.r * self.r**other.m, other.m
        elif other.m == 1:
            r, m = self.r * other.r**self.m, self.m
        else:
            m = self.m * other.m
            r = self.r**other.m * other.r**self.m
        return LinearMap(self.matrix * other.matrix, (r, m) if m != 1 or r != 1 else None)

    def __mul__(self, other):
        if isinstance(other, LinearMap):
            return self.compose(other)
        return NotImplemented

    def transpose(self) -> "LinearMap":
        return LinearMap(self.matrix.transpose(), (self.r, self.m))

    def inverse(self) -> "LinearMap":
        # (M/s)^-1 = s M^-1 = M^-1 / s' with s'^m = 1/r
        return LinearMap(self.inverse_matrix(), (normalize_scalar(QQ(1) / self.r), self.m))

    def __repr__(self):
        scale = "" if (self.m == 1 and self.r == 1) else f" / s, s^{self.m} = {self.r}"
        return f"LinearMap({self.matrix.tolist()}{scale})"


def _as_map(C):
    return C if isinstance(C, LinearMap) else LinearMap(C)


def apply_linear(f: Form, C) -> Form:
    """(C.f)(z) = f(C^-1 z)."""
    C = _as_map(C)
    factor = C.scale_power(f.d)
    g = substitute_linear(f, C.inverse_matrix().tolist())
    return g * factor if factor != 1 else g


def apply_dual_linear(g: Form, C) -> Form:
    """(C.g)(z*) = g(C^-1 . z*), where C . z* is the row vector z* C^-1."""
    C = _as_map(C)
    if C.det_matrix() == 0:
        raise SingularMatrix("linear map is singular")
    factor = C.scale_power(-g.d)
    h = substitute_linear(g, C.matrix.transpose().tolist())
    return h * factor if factor != 1 else h


def apply_contragredient(f: Form, C) -> Form:
    """(C^-1)^T . f, the action used for the olddef avatar."""
    C = _as_map(C)
    return apply_linear(f, C.inverse().transpose())


# -- apolarity -------------------------------------------------------------------
def apolar_apply(p: Form, h: Form) -> Form:
    """p(d/dz1, ..., d/dzn) applied to h."""
    if p.n != h.n:
        raise DomainMismatch("apolar_apply needs the same number of variables")
    e = h.d - p.d
    if e < 0:
        return Form.zero(h.n, 0, h.dual)
    table = {}
    for a, ca in p.coeffs.items():
        for b, cb in h.coeffs.items():
            if any(x > y for x, y in zip(a, b)):
                continue
            k = 1
            for x, y in zip(a, b):
                for j in range(y - x + 1, y + 1):
                    k *= j
            m = tuple(y - x for x, y in zip(a, b))
            v = table.get(m)
            table[m] = ca * cb * k if v is None else v + ca * cb * k
    return Form(h.n, e, table, h.dual)


def polar_pair(g: Form, h: Form):
    """Full contraction of a dual form with a form of the same degree."""
    if g.d != h.d:
        raise DegreeMismatch("polar pairing needs equal degrees")
    if g.n != h.n:
        raise DomainMismatch("polar pairing needs the same number of variables")
    total = QQ(0)
    for m, c in g.coeffs.items():
        v = h.coeffs.get(m)
        if v is not None:
            total = total + c * v * exp_factorial(m)
    return normalize_scalar(total)


# -- binary hat / tilde -------------------------------------------------------------
def hat(g: Form) -> Form:
    """hat(g)(z1, z2) = g(-z2, z1) for a binary dual form."""
    if g.n != 2:
        raise WrongArity("hat is defined for binary forms only")
    table = {}
    for (i, j), c in g.coeffs.items():
        table[(j, i)] = -c if i % 2 else c
    return Form(2, g.d, table, dual=False)


def tilde(f: Form) -> Form:
    """tilde(f)(z1*, z2*) = f(z2*, -z1*) for a binary form."""
    if f.n != 2:
        raise WrongArity("tilde is defined for binary forms only")
    table = {}
    for (i, j), c in f.coeffs.items():
        table[(j, i)] = -c if j % 2 else c
    return Form(2, f.d, table, dual=True)
