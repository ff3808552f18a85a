"""Orbit tangent spaces and the hyperplane maps psi1, psi2 and Psi.

Hyperplanes of Q_n^e are stored both as a spanning list and (when the span
has codimension one) as a normal dual form g with polar_pair(g, w) = 0 on the
span.  Equality of hyperplanes is always decided by rank tests on the spans.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateForm, UnsupportedSpace
from .forms import Form, exp_factorial, monomial_basis, partial_derivative, substitute_linear
from .linalg.matrix import Matrix, kernel, span_rank, subspace_equal
from .milnor import associated_form, gradient_products
from .poly import Poly
from .scalars import QQ

DUALITY_SPACES = ((2, 4), (3, 3))


@dataclass
class Hyperplane:
    n: int
    degree: int
    span: list
    rank: int
    normal: Form | None = None

    @property
    def ambient_dimension(self) -> int:
        return len(monomial_basis(self.n, self.degree))

    @property
    def is_hyperplane(self) -> bool:
        return self.rank == self.ambient_dimension - 1

    def contains(self, w: Form) -> bool:
        return span_rank(self.span + [w]) == self.rank

    def same_as(self, other: "Hyperplane") -> bool:
        return (self.n, self.degree) == (other.n, other.degree) and subspace_equal(self.span, other.span)


def normal_of(span: list, n: int, e: int) -> Form | None:
    """The dual form pairing to zero with ``span`` (None unless the span is a hyperplane)."""
    basis = monomial_basis(n, e)
    rows = [[c * exp_factorial(m) for c, m in zip(w.coefficient_vector(basis), basis)] for w in span]
    ker = kernel(Matrix(rows, len(basis))) if rows else [None] * len(basis)
    if len(ker) != 1:
        return None
    return Form.from_vector(n, e, ker[0], basis, dual=True)


def pairing_kernel(g: Form) -> list:
    """A basis of {h : polar_pair(g, h) = 0}."""
    basis = monomial_basis(g.n, g.d)
    row = [g.coeff(m) * exp_factorial(m) for m in basis]
    return [Form.from_vector(g.n, g.d, v, basis) for v in kernel(Matrix([row], len(basis)))]


def _package(n, e, span) -> Hyperplane:
    r = span_rank(span)
    H = Hyperplane(n, e, span, r)
    if H.is_hyperplane:
        H.normal = normal_of(span, n, e)
    return H


def psi1(f: Form) -> Hyperplane:
    """Span of the products z_i * df/dz_j (rank n^2 for nondegenerate quartics and cubics)."""
    grads = [partial_derivative(f, j) for j in range(f.n)]
    span = [g * Form.monomial(tuple(int(k == i) for k in range(f.n))) for g in grads for i in range(f.n)]
    return _package(f.n, f.d, span)


_EPS = "eps_"


def orbit_tangent_vectors(f: Form) -> list:
    """d/dt (exp(t E_ij) . f) at t = 0 for all i, j, by substitution into f(C^-1 z)."""
    n = f.n
    eps = Poly.gen(_EPS)
    out = []
    for i in range(n):
        for j in range(n):
            # C = 1 + t E_ij has inverse 1 - t E_ij to first order
            N = [[QQ(1) if r == c else QQ(0) for c in range(n)] for r in range(n)]
            N[i][j] = N[i][j] - eps
            moved = substitute_linear(f, N)
            table = {}
            for m, c in moved.coeffs.items():
                if isinstance(c, Poly):
                    lin = c.diff(_EPS).subs({_EPS: QQ(0)})
                    if lin:
                        table[m] = lin
            out.append(Form(n, f.d, table, f.dual))
    return out


def psi2(f: Form) -> Hyperplane:
    """The tangent space at f to its GL_n orbit."""
    return _package(f.n, f.d, orbit_tangent_vectors(f))


def big_psi(f: Form) -> Hyperplane:
    """W_f as a hyperplane of the socle-degree forms, with its normal."""
    n = f.n
    e = n * (f.d - 2)
    H = _package(n, e, gradient_products(f))
    if not H.is_hyperplane:
        raise DegenerateForm("W_f is not a hyperplane (the discriminant vanishes)")
    return H


def proportional(g: Form, h: Form) -> bool:
    if (g.n, g.d) != (h.n, h.d):
        return False
    if g.is_zero() or h.is_zero():
        return g.is_zero() and h.is_zero()
    return span_rank([g, h.as_dual() if g.dual else h.as_primal()]) == 1


def check_psi_lemmas(f: Form) -> bool:
    """psi1 = psi2 and the normal of Psi(f) is proportional to Phi(f)."""
    if not psi1(f).same_as(psi2(f)):
        return False
    return proportional(big_psi(f).normal, associated_form(f).form)


def check_duality_theorem(f: Form) -> bool:
    """The orbit tangent hyperplane at f equals the kernel of polar_pair(Phi(f), .)."""
    if (f.n, f.d) not in DUALITY_SPACES:
        raise UnsupportedSpace("the duality statement concerns binary quartics and ternary cubics")
    T = psi2(f)
    if not T.is_hyperplane:
        raise DegenerateForm("the orbit tangent space is not a hyperplane")
    phi = associated_form(f).form
    return subspace_equal(T.span, pairing_kernel(phi))
