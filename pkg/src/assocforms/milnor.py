"""Milnor algebras of forms and the associated form.

For a form f of degree d in n variables put nu = n(d - 2).  The products
m * df/dz_i with deg m = nu - d + 1 span a hyperplane W_f of the degree-nu
forms; together with the Hessian they span everything.  Writing a monomial as

    g = sum_k alpha_k e_k + gamma H(f)

defines mu_g = gamma, and the associated form is the dual form
sum_I multinomial(I) mu_I z*^I.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .errors import AlgebraError, DegenerateForm, SingularSystem, UnsupportedSpace
from .forms import (
    Form,
    LinearMap,
    apolar_apply,
    apply_contragredient,
    apply_dual_linear,
    apply_linear,
    basis_size,
    hessian,
    monomial_basis,
    multinomial,
    partial_derivative,
    polar_pair,
    tilde,
)
from .linalg.matrix import Matrix, bareiss_determinant, rank, solve, solve_fraction_free
from .poly import Poly
from .scalars import DOMAIN_PARAMS, QQ, exact_div, normalize_scalar

PATH_REDUCTION = "reduction"
PATH_CLOSED = "closed-form"
PATHS = ("auto", PATH_REDUCTION, PATH_CLOSED, "both")
CLOSED_FORM_SPACES = ((2, 4), (3, 3), (2, 5))


def socle_degree(n: int, d: int) -> int:
    return n * (d - 2)


def gradient_products(f: Form) -> list:
    """All m * f_i with m of degree nu - d + 1; variable index outer, monomial inner."""
    if f.d < 3:
        raise ValueError("the Milnor algebra construction needs d >= 3")
    e = socle_degree(f.n, f.d) - f.d + 1
    grads = [partial_derivative(f, i) for i in range(f.n)]
    mons = monomial_basis(f.n, e)
    return [g * Form.monomial(m) for g in grads for m in mons]


def _is_symbolic(f: Form) -> bool:
    return f.domain() == DOMAIN_PARAMS


def _param_names(f: Form) -> list:
    names = set()
    for c in f.coeffs.values():
        if isinstance(c, Poly):
            names.update(c.used_gens())
    return sorted(names)


def _specializations(names):
    # deterministic, spread-out rational points
    primes = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47]
    for shift in range(12):
        yield {x: QQ(primes[(i + shift) % len(primes)] + shift, 1 + (i * shift) % 5) for i, x in enumerate(names)}


@dataclass
class ReductionSystem:
    """The square system A(f) x = g: selected gradient products plus the Hessian."""

    f: Form
    products: list  # (i, monomial) for each selected column
    product_forms: list
    hessian: Form
    basis: list  # socle-degree monomials, row order of A
    matrix: Matrix
    N: int
    K: int
    _det: object = field(default=None, repr=False)

    @property
    def det(self):
        """D(f) = det A(f), computed on first use."""
        if self._det is None:
            self._det = normalize_scalar(bareiss_determinant(self.matrix))
        return self._det

    @property
    def socle_degree(self):
        return socle_degree(self.f.n, self.f.d)


def _select_columns(columns: list, basis: list, need: int, f: Form) -> list:
    """Indices of the first ``need`` independent columns, in order."""
    if _is_symbolic(f):
        names = _param_names(f)
        for point in _specializations(names):
            numeric = [[normalize_scalar(c.subs(point)) if isinstance(c, Poly) else c for c in col] for col in columns]
            chosen = _first_independent(numeric, need)
            if len(chosen) == need:
                return chosen
        raise DegenerateForm("could not find independent gradient products at any specialization")
    return _first_independent(columns, need)


def _first_independent(columns: list, need: int) -> list:
    # row-reduce the transposed system column by column (columns as sparse rows)
    rows = [{i: x for i, x in enumerate(col) if x} for col in columns]
    chosen = []
    reduced = []  # (pivot index, row)
    for k, row in enumerate(rows):
        r = dict(row)
        for p, prow in reduced:
            c = r.get(p)
            if c:
                for j, v in prow.items():
                    s = r.get(j, 0) - c * v
                    if s:
                        r[j] = s
                    else:
                        r.pop(j, None)
        if r:
            p = min(r)
            inv = QQ(1) / r[p]
            r = {j: v * inv for j, v in r.items()}
            # keep the stored rows fully reduced at their pivots
            new_reduced = []
            for q, qrow in reduced:
                c = qrow.get(p)
                if c:
                    qrow = dict(qrow)
                    for j, v in r.items():
                        s = qrow.get(j, 0) - c * v
                        if s:
                            qrow[j] = s
                        else:
                            qrow.pop(j, None)
                new_reduced.append((q, qrow))
            reduced = new_reduced + [(p, r)]
            chosen.append(k)
            if len(chosen) == need:
                break
    return chosen


def build_reduction(f: Form) -> ReductionSystem:
    if f.d < 3:
        raise ValueError("the Milnor algebra construction needs d >= 3")
    if f.dual:
        raise AlgebraError("build_reduction expects a primal form")
    n, d = f.n, f.d
    nu = socle_degree(n, d)
    basis = monomial_basis(n, nu)
    N = len(basis)
    K = basis_size(n, nu - d + 1)
    mons = monomial_basis(n, nu - d + 1)
    labels = [(i, m) for i in range(n) for m in mons]
    forms = gradient_products(f)
    columns = [p.coefficient_vector(basis) for p in forms]
    if n == 2:
        chosen = list(range(len(forms)))
    else:
        chosen = _select_columns(columns, basis, N - 1, f)
        if len(chosen) < N - 1:
            raise DegenerateForm(f"gradient products span only {len(chosen)} < {N - 1} dimensions")
    H = hessian(f)
    cols = [columns[k] for k in chosen] + [H.coefficient_vector(basis)]
    A = Matrix.from_columns(cols, rows=N)
    R = ReductionSystem(f, [labels[k] for k in chosen], [forms[k] for k in chosen], H, basis, A, N, K)
    if not _is_symbolic(f) and R.det == 0:
        raise DegenerateForm("the products and the Hessian do not span the socle-degree forms")
    return R


def reduce_to_socle(R: ReductionSystem, g: Form):
    """Return (alphas, gamma) with g = sum alpha_k e_k + gamma H(f)."""
    if g.d != R.socle_degree or g.n != R.f.n:
        raise ValueError(f"expected a form of degree {R.socle_degree} in {R.f.n} variables")
    try:
        x = solve(R.matrix, g.coefficient_vector(R.basis))
    except SingularSystem as exc:
        raise DegenerateForm(str(exc)) from exc
    return tuple(x[:-1]), x[-1]


@dataclass
class AssociatedForm:
    f: Form
    mu: dict  # exponent tuple -> mu coefficient
    form: Form  # the dual form
    olddef: Form  # same coefficients read in z
    det: object = None  # D(f) (symbolic case only)
    numerators: dict = None  # D(f) * mu (symbolic case only)

    @property
    def degree(self):
        return self.form.d


def _assemble(n, nu, mu: dict) -> Form:
    return Form(n, nu, {I: multinomial(I) * v for I, v in mu.items()}, dual=True)


def mu_coefficients(R: ReductionSystem) -> dict:
    """mu_I for every socle-degree monomial, from one transposed solve."""
    last = [QQ(0)] * (R.N - 1) + [QQ(1)]
    try:
        y = solve(R.matrix.transpose(), last)
    except SingularSystem as exc:
        raise DegenerateForm(str(exc)) from exc
    return {I: normalize_scalar(v) for I, v in zip(R.basis, y) if v}


def mu_numerators(R: ReductionSystem):
    """(D(f), {I: D(f) mu_I}) with fraction-free arithmetic (polynomial entries stay polynomial)."""
    last = [QQ(0)] * (R.N - 1) + [QQ(1)]
    try:
        D, y = solve_fraction_free(R.matrix.transpose(), last)
    except SingularSystem as exc:
        raise DegenerateForm(str(exc)) from exc
    R._det = D
    return D, {I: v for I, v in zip(R.basis, y) if v}


def associated_form(f: Form) -> AssociatedForm:
    R = build_reduction(f)
    nu = R.socle_degree
    if _is_symbolic(f):
        from .poly import RatFunc

        D, nums = mu_numerators(R)
        if not D:
            raise DegenerateForm("D(f) vanishes identically")
        mu = {I: normalize_scalar(RatFunc.make(v, D) if isinstance(D, Poly) else v / D) for I, v in nums.items()}
        af = AssociatedForm(f, mu, _assemble(f.n, nu, mu), None, D, nums)
    else:
        mu = mu_coefficients(R)
        af = AssociatedForm(f, mu, _assemble(f.n, nu, mu), None)
    af.olddef = af.form.as_primal()
    return af


def hilbert_function(f: Form) -> tuple:
    """dim of each graded piece of C[z]/(f_1, ..., f_n), degrees 0..nu."""
    if _is_symbolic(f):
        raise UnsupportedSpace("hilbert_function needs numeric coefficients")
    n, d = f.n, f.d
    nu = socle_degree(n, d)
    grads = [partial_derivative(f, i) for i in range(n)]
    out = []
    for e in range(nu + 1):
        basis = monomial_basis(n, e)
        if e < d - 1:
            out.append(len(basis))
            continue
        mons = monomial_basis(n, e - d + 1)
        rows = [(g * Form.monomial(m)).coefficient_vector(basis) for g in grads for m in mons]
        out.append(len(basis) - rank(Matrix(rows, len(basis))))
    if out[-1] != 1:
        raise DegenerateForm("the Milnor algebra is not Gorenstein with socle in degree nu")
    return tuple(out)


def catalecticant_rank(F: Form, e: int) -> int:
    """Rank of p -> apolar_apply(p, F) on degree-e forms (the codimension of Ann(F)_e)."""
    src = monomial_basis(F.n, e)
    dst = monomial_basis(F.n, F.d - e)
    rows = [apolar_apply(Form.monomial(m), F).coefficient_vector(dst) for m in src]
    return rank(Matrix(rows, len(dst)))


def verify_inverse_system(f: Form, af: AssociatedForm | None = None) -> bool:
    """Check that olddef Phi(f) is a Macaulay inverse system for the Milnor algebra of f."""
    af = af or associated_form(f)
    F = af.olddef
    for w in gradient_products(f):
        if not apolar_apply(w, F).is_zero():
            return False
    h = hilbert_function(f)
    return all(catalecticant_rank(F, e) == h[e] for e in range(F.d + 1))


# -- Delta * Phi -----------------------------------------------------------------------
def _discriminant(f: Form):
    from .cit.classical import discriminant

    return discriminant(f)


def closed_form_delta_phi(f: Form) -> Form:
    """Delta * Phi from classical covariants; defined for every f in the supported spaces."""
    from .cit import catalogue as cat

    key = (f.n, f.d)
    if key == (2, 4):
        inner = hessian(f) * (cat.evaluate("I2", f) * QQ(1, 2**7 * 3**3)) - f * (cat.evaluate("I3", f) * QQ(1, 16))
        return tilde(inner)
    if key == (3, 3):
        return cat.evaluate("P", f) * (-cat.evaluate("I6", f) * QQ(1, 36)) - cat.evaluate("Q", f) * (
            cat.evaluate("I4", f) * QQ(1, 27)
        )
    if key == (2, 5):
        C = {k: cat.evaluate(k, f) for k in ("C40", "C26", "C15", "C51", "C33", "C22")}
        inner = (
            C["C26"] * (C["C40"] * QQ(1, 20))
            - C["C15"] * C["C51"] * QQ(3, 50)
            + C["C33"] * C["C33"] * QQ(27, 10)
            - C["C22"] ** 3 * QQ(1, 10)
        )
        return tilde(inner)
    raise UnsupportedSpace(f"no closed form for (n, d) = {key}")


def reduction_delta_phi(f: Form) -> Form:
    """Delta(f) * Phi(f) via socle reduction (exact division in the symbolic case)."""
    delta = _discriminant(f)
    R = build_reduction(f)
    nu = R.socle_degree
    if _is_symbolic(f):
        D, nums = mu_numerators(R)
        if not D:
            raise DegenerateForm("D(f) vanishes identically")
        mu = {I: normalize_scalar(exact_div(delta * v, D)) for I, v in nums.items()}
        return _assemble(f.n, nu, mu)
    if delta == 0:
        raise DegenerateForm("Delta(f) = 0: the reduction path needs a nondegenerate form")
    mu = mu_coefficients(R)
    return _assemble(f.n, nu, {I: v * delta for I, v in mu.items()})


def delta_phi_with_path(f: Form, path: str = "auto"):
    """Return (Delta * Phi(f), path used)."""
    if path not in PATHS:
        raise ValueError(f"unknown path {path!r}; choose from {PATHS}")
    key = (f.n, f.d)
    if key not in ((2, 4), (3, 3), (2, 5)):
        raise UnsupportedSpace(f"Delta is only normalized for (2,4), (2,5), (3,3), not {key}")
    if path == PATH_CLOSED:
        return closed_form_delta_phi(f), PATH_CLOSED
    if path == PATH_REDUCTION:
        return reduction_delta_phi(f), PATH_REDUCTION
    if path == "both":
        a = reduction_delta_phi(f)
        b = closed_form_delta_phi(f)
        if a != b:
            raise AlgebraError("reduction and closed-form values of Delta * Phi disagree")
        return a, "both"
    if _is_symbolic(f) or _discriminant(f) != 0:
        return reduction_delta_phi(f), PATH_REDUCTION
    return closed_form_delta_phi(f), PATH_CLOSED


def delta_phi(f: Form, path: str = "auto") -> Form:
    return delta_phi_with_path(f, path)[0]


def equivariance_check(f: Form, C) -> bool:
    """Phi(C.f) = det(C)^2 C.Phi(f) for the dual form and the olddef avatar."""
    C = C if isinstance(C, LinearMap) else LinearMap(C)
    g = apply_linear(f, C)
    af, ag = associated_form(f), associated_form(g)
    det2 = C.det() ** 2
    dual_ok = ag.form == apply_dual_linear(af.form, C) * det2
    old_ok = ag.olddef == apply_contragredient(af.olddef, C) * det2
    return dual_ok and old_ok


def hyperplane_defect(f: Form, af: AssociatedForm | None = None) -> bool:
    """True when Phi(f) pairs to zero with W_f and not with H(f)."""
    af = af or associated_form(f)
    if any(polar_pair(af.form, w) != 0 for w in gradient_products(f)):
        return False
    return polar_pair(af.form, hessian(f)) != 0


def discriminant_scalar(d: int):
    """The constant c with D(f) = c * Delta(f) for generic binary forms of degree d.

    Delta is the normalized discriminant for d = 4, 5 and the unnormalized
    resultant of the partials otherwise.
    """
    from .cit.classical import discriminant, resultant_discriminant
    from .families import generic_form

    f = generic_form(2, d)
    R = build_reduction(f)
    D = R.det
    delta = discriminant(f) if d in (4, 5) else resultant_discriminant(f)
    c = exact_div(D, delta)
    c = normalize_scalar(c)
    if isinstance(c, Poly):
        raise AlgebraError(f"D(f) is not a constant multiple of Delta(f) for d = {d}")
    return c
