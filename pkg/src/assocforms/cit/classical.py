"""Transvectants, discriminants, the j-invariant and GIT stability strata."""
from __future__ import annotations

from math import comb, factorial

from ..errors import DegenerateForm, UnsupportedSpace, WrongArity
from ..forms import Form, partial_derivative
from ..linalg.matrix import Matrix, bareiss_determinant
from ..scalars import QQ, normalize_scalar
from . import catalogue

STABLE = "stable"
SEMISTABLE = "strictly-semistable"
UNSTABLE = "unstable"

NORMALIZED_SPACES = ((2, 4), (2, 5), (3, 3))


def _mixed_partial(f: Form, k1: int, k2: int) -> Form:
    for _ in range(k1):
        f = partial_derivative(f, 0)
    for _ in range(k2):
        f = partial_derivative(f, 1)
    return f


def transvectant(f: Form, g: Form, r: int) -> Form:
    """The r-th transvectant (f, g)_r of two binary forms.

    Normalized by (m-r)!(p-r)!/(m!p!), so (f, g)_0 = f g.
    """
    if f.n != 2 or g.n != 2:
        raise WrongArity("transvectants are defined for binary forms")
    m, p = f.d, g.d
    if not 0 <= r <= min(m, p):
        raise ValueError(f"transvectant order {r} exceeds the degrees {m}, {p}")
    total = Form.zero(2, m + p - 2 * r)
    for k in range(r + 1):
        term = _mixed_partial(f, r - k, k) * _mixed_partial(g, k, r - k)
        total = total + (term * comb(r, k) if k % 2 == 0 else term * (-comb(r, k)))
    return total * (QQ(factorial(m - r) * factorial(p - r)) / (factorial(m) * factorial(p)))


def binary_resultant(g: Form, h: Form):
    """Resultant of two binary forms via the Sylvester matrix."""
    if g.n != 2 or h.n != 2:
        raise WrongArity("resultants are implemented for binary forms")
    p, q = g.d, h.d
    size = p + q
    if size == 0:
        return QQ(1)
    gc = [g.coeff((p - k, k)) for k in range(p + 1)]
    hc = [h.coeff((q - k, k)) for k in range(q + 1)]
    rows = []
    for i in range(q):
        rows.append([QQ(0)] * i + gc + [QQ(0)] * (size - p - 1 - i))
    for i in range(p):
        rows.append([QQ(0)] * i + hc + [QQ(0)] * (size - q - 1 - i))
    return bareiss_determinant(Matrix(rows))


def resultant_discriminant(f: Form):
    """Res(df/dz1, df/dz2); vanishes exactly when f has a repeated factor (unnormalized)."""
    if f.n != 2:
        raise WrongArity("the resultant discriminant is defined for binary forms")
    return binary_resultant(partial_derivative(f, 0), partial_derivative(f, 1))


def discriminant(f: Form, normalized: bool = True):
    """Discriminant of f.

    Normalized values are available for binary quartics, binary quintics and
    ternary cubics.  With ``normalized=False`` any binary form is accepted and
    the result is only meaningful as a zero test.
    """
    key = (f.n, f.d)
    if not normalized:
        if f.n == 2:
            return resultant_discriminant(f)
        raise UnsupportedSpace(f"no discriminant for n={f.n}")
    ev = catalogue.evaluate
    if key == (2, 4):
        return normalize_scalar(ev("I2", f) ** 3 - 27 * ev("I3", f) ** 2)
    if key == (3, 3):
        return normalize_scalar(ev("I6", f) ** 2 + 64 * ev("I4", f) ** 3)
    if key == (2, 5):
        return normalize_scalar(ev("C40", f) ** 2 - 128 * ev("C80", f))
    raise UnsupportedSpace(f"normalized discriminant not available for (n, d) = {key}")


def invariants(f: Form) -> dict:
    """The generating invariants for (2, 4) and (3, 3), keyed by name."""
    key = (f.n, f.d)
    names = {(2, 4): ("I2", "I3"), (3, 3): ("I4", "I6"), (2, 5): ("C40", "C80")}.get(key)
    if names is None:
        raise UnsupportedSpace(f"no invariant catalogue for (n, d) = {key}")
    return {name: catalogue.evaluate(name, f) for name in names}


def j_invariant(f: Form):
    """J = I2^3/Delta for quartics and 64 I4^3/Delta for cubics."""
    key = (f.n, f.d)
    if key not in ((2, 4), (3, 3)):
        raise UnsupportedSpace(f"J is defined for binary quartics and ternary cubics, not {key}")
    delta = discriminant(f)
    if delta == 0:
        raise DegenerateForm("J is undefined when the discriminant vanishes")
    inv = invariants(f)
    if key == (2, 4):
        return normalize_scalar(inv["I2"] ** 3 / delta)
    return normalize_scalar(64 * inv["I4"] ** 3 / delta)


def stability_classify(f: Form) -> str:
    key = (f.n, f.d)
    if key not in ((2, 4), (3, 3)):
        raise UnsupportedSpace(f"stability strata are implemented for (2, 4) and (3, 3), not {key}")
    if discriminant(f) != 0:
        return STABLE
    if all(v == 0 for v in invariants(f).values()):
        return UNSTABLE
    return SEMISTABLE
