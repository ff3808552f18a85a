"""Named families of forms, special matrices and seeded random inputs."""
from __future__ import annotations

import random as _random
from fractions import Fraction

from .forms import Form, LinearMap, monomial_basis
from .linalg.matrix import Matrix
from .poly import Poly
from .scalars import QQ, QOmega, qq

OMEGA = QOmega(0, 1)


def q(t) -> Form:
    """z1^4 + t z1^2 z2^2 + z2^4."""
    return Form(2, 4, {(4, 0): 1, (2, 2): t, (0, 4): 1})


def c(t) -> Form:
    """z1^3 + z2^3 + z3^3 + t z1 z2 z3 (the Hesse pencil)."""
    return Form(3, 3, {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1, (1, 1, 1): t})


def bold_q(t) -> Form:
    """Closed form of the associated form of q_t, as a dual form."""
    s = QQ(1) / (72 * (t * t - 4))
    return Form(2, 4, {(4, 0): t * s, (2, 2): -12 * s, (0, 4): t * s}, dual=True)


def bold_c(t) -> Form:
    """Closed form of the associated form of c_t, as a dual form."""
    s = -QQ(1) / (24 * (t**3 + 27))
    return Form(
        3,
        3,
        {(3, 0, 0): t * s, (0, 3, 0): t * s, (0, 0, 3): t * s, (1, 1, 1): -18 * s},
        dual=True,
    )


def quartic_family(a, b, c_) -> Form:
    """a z1^4 + 6 b z1^2 z2^2 + c z2^4."""
    return Form(2, 4, {(4, 0): a, (2, 2): 6 * b, (0, 4): c_})


def cubic_family(a, b, c_, d) -> Form:
    """a z1^3 + b z2^3 + c z3^3 + 6 d z1 z2 z3."""
    return Form(3, 3, {(3, 0, 0): a, (0, 3, 0): b, (0, 0, 3): c_, (1, 1, 1): 6 * d})


def sylvester_linear_forms():
    """X = z1, Y = z2, Z = -z1 - z2 (so that X + Y + Z = 0)."""
    X = Form(2, 1, {(1, 0): 1})
    Y = Form(2, 1, {(0, 1): 1})
    Z = Form(2, 1, {(1, 0): -1, (0, 1): -1})
    return X, Y, Z


def sylvester_quintic(a, b, c_) -> Form:
    """a X^5 + b Y^5 + c Z^5."""
    X, Y, Z = sylvester_linear_forms()
    return X**5 * a + Y**5 * b + Z**5 * c_


def symbols(*names):
    return Poly.gens_of(*names)


def coefficient_name(alpha, prefix: str = "a") -> str:
    if all(e < 10 for e in alpha):
        return prefix + "".join(map(str, alpha))
    return prefix + "_".join(map(str, alpha))


def generic_form(n: int, d: int, prefix: str = "a") -> Form:
    """The form sum_alpha a_alpha z^alpha with one indeterminate per monomial."""
    return Form(n, d, {al: Poly.gen(coefficient_name(al, prefix)) for al in monomial_basis(n, d)})


# -- special matrices ------------------------------------------------------------
def matrix_rotation_quartic() -> LinearMap:
    """(1/sqrt 2) [[1, 1], [-1, 1]]; sends q_t to q_{(-2t+12)/(t+2)}."""
    return LinearMap(Matrix([[1, 1], [-1, 1]]), (2, 2))


def matrix_cubic_torus() -> LinearMap:
    """diag(w^(1/3), w^(1/3), w^(-2/3)) = diag(1, 1, w^2) / s with s^3 = w^2."""
    return LinearMap(Matrix([[1, 0, 0], [0, 1, 0], [0, 0, OMEGA * OMEGA]]), (OMEGA * OMEGA, 3))


def matrix_cubic_fourier() -> LinearMap:
    """(3(w^2 - w))^(-1/3) [[1,1,1],[w,w^2,1],[w^2,w,1]]; sends c_t to c_{(-3t+18)/(t+3)}."""
    w, w2 = OMEGA, OMEGA * OMEGA
    M = Matrix([[1, 1, 1], [w, w2, 1], [w2, w, 1]])
    return LinearMap(M, ((w2 - w) * 3, 3))


# -- random inputs -------------------------------------------------------------------
def rng(seed) -> _random.Random:
    return _random.Random(seed)


def random_rational(r: _random.Random, bits: int = 31) -> QQ:
    bound = 1 << bits
    num = r.randint(-bound, bound)
    den = r.randint(1, bound)
    return QQ(num, den)


def random_small_rational(r: _random.Random, size: int = 9) -> QQ:
    return QQ(r.randint(-size, size), r.randint(1, size))


def random_sl(n: int, r: _random.Random, steps: int = 6, size: int = 3) -> LinearMap:
    """Product of integer shears and signed permutations (determinant 1)."""
    M = Matrix.identity(n)
    for _ in range(steps):
        if r.random() < 0.7:
            i, j = r.sample(range(n), 2)
            E = Matrix.identity(n).tolist()
            E[i][j] = QQ(r.choice([k for k in range(-size, size + 1) if k]))
            M = Matrix(E) * M
        else:
            perm = list(range(n))
            r.shuffle(perm)
            P = [[QQ(0)] * n for _ in range(n)]
            for i, p in enumerate(perm):
                P[i][p] = QQ(r.choice((1, -1)))
            sign = _perm_sign(perm)
            prod = 1
            for i in range(n):
                prod *= P[i][perm[i]]
            if sign * prod < 0:
                P[0][perm[0]] = -P[0][perm[0]]
            M = Matrix(P) * M
    return LinearMap(M)


def random_unipotent(n: int, r: _random.Random, size: int = 3) -> LinearMap:
    rows = [[QQ(1) if i == j else (QQ(r.randint(-size, size)) if j > i else QQ(0)) for j in range(n)] for i in range(n)]
    return LinearMap(Matrix(rows))


def _perm_sign(perm) -> int:
    sign = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def random_form(n: int, d: int, r: _random.Random, size: int = 5, density: float = 1.0) -> Form:
    table = {}
    for m in monomial_basis(n, d):
        if r.random() <= density:
            table[m] = QQ(r.randint(-size, size))
    return Form(n, d, table)


def random_rational_form(n: int, d: int, r: _random.Random, bits: int = 31) -> Form:
    return Form(n, d, {m: random_rational(r, bits) for m in monomial_basis(n, d)})


def sample_ts(count: int, exclude=(), seed: int = 0) -> list:
    """Deterministic list of distinct rationals t avoiding ``exclude``."""
    out = []
    r = _random.Random(seed)
    excl = {Fraction(x) for x in exclude}
    while len(out) < count:
        t = QQ(r.randint(-40, 40), r.randint(1, 7))
        if Fraction(int(t.numerator), int(t.denominator)) in excl or t in out:
            continue
        out.append(t)
    return out


def as_qq(x):
    return qq(x)
