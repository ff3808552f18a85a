"""Synthesis of covariants and contravariants by infinitesimal invariance.

A bihomogeneous polynomial of degree K in the coefficients a_alpha of a form in
Q_n^d and degree D in the point variables is stored as a dict mapping
``(S, beta)`` to a rational, where ``S`` is a sorted tuple of K indices into
``monomial_basis(n, d)`` and ``beta`` an exponent tuple of degree D.

The generator E_ij acts on coefficients through f -> -z_j f_i, on points of C^n
by z -> E_ij z and on dual points by z* -> -z* E_ij.  A polynomial killed by
all E_ij with i != j and of constant torus weight is an SL_n (co/contra)variant.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations_with_replacement

from ..errors import AnchorAmbiguous, AnchorMismatch, BudgetExceeded, WrongSpace
from ..forms import Form, LinearMap, apply_dual_linear, apply_linear, basis_size, monomial_basis
from ..linalg.matrix import Matrix, _kernel_from_rref, _rref_sparse
from ..poly import Poly
from ..scalars import QQ, normalize_scalar

COVARIANT = "covariant"
CONTRAVARIANT = "contravariant"

DEFAULT_DIRECT_BUDGET = 5000
DEFAULT_MAX_COLUMNS = 30000


@dataclass(frozen=True)
class CovariantSpec:
    n: int
    d: int
    degree: int
    order: int
    variance: str = COVARIANT

    def __post_init__(self):
        if self.variance not in (COVARIANT, CONTRAVARIANT):
            raise ValueError(f"unknown variance {self.variance!r}")
        if self.degree < 0 or self.order < 0:
            raise ValueError("degree and order must be nonnegative")

    @property
    def dual(self) -> bool:
        return self.variance == CONTRAVARIANT

    def predicted_weight(self):
        """k with n k = d K - D (covariants) or d K + D (contravariants); None if not integral."""
        num = self.d * self.degree + (self.order if self.dual else -self.order)
        return num // self.n if num % self.n == 0 else None

    def weight_consistent(self) -> bool:
        return self.predicted_weight() is not None

    def full_dimension(self) -> int:
        N = basis_size(self.n, self.d)
        return basis_size(N, self.degree) * basis_size(self.n, self.order)

    def key(self) -> str:
        v = "contra" if self.dual else "co"
        return f"n{self.n}d{self.d}K{self.degree}D{self.order}{v}"

    def to_dict(self):
        return {"n": self.n, "d": self.d, "degree": self.degree, "order": self.order, "variance": self.variance}

    @classmethod
    def from_dict(cls, doc):
        return cls(int(doc["n"]), int(doc["d"]), int(doc["degree"]), int(doc["order"]), doc["variance"])


@lru_cache(maxsize=None)
def _coeff_basis(n, d):
    basis = monomial_basis(n, d)
    return tuple(basis), {m: i for i, m in enumerate(basis)}


def _torus_weights(spec: CovariantSpec, S, beta):
    basis, _ = _coeff_basis(spec.n, spec.d)
    w = []
    for i in range(spec.n):
        s = -sum(basis[k][i] for k in S)
        s += -beta[i] if spec.dual else beta[i]
        w.append(s)
    return w


def weight_block(spec: CovariantSpec) -> list:
    """Bihomogeneous monomials on which every E_ii acts by the same scalar."""
    basis, _ = _coeff_basis(spec.n, spec.d)
    betas = monomial_basis(spec.n, spec.order)
    out = []
    for S in combinations_with_replacement(range(len(basis)), spec.degree):
        tot = [sum(basis[k][i] for k in S) for i in range(spec.n)]
        for b in betas:
            if spec.dual:
                w = [-t - x for t, x in zip(tot, b)]
            else:
                w = [x - t for t, x in zip(tot, b)]
            if all(x == w[0] for x in w):
                out.append((S, b))
    return out


def apply_generator(spec: CovariantSpec, i: int, j: int, S, beta) -> dict:
    """Image of one bihomogeneous monomial under the derivation for E_ij (i != j)."""
    basis, index = _coeff_basis(spec.n, spec.d)
    out = {}
    for pos, k in enumerate(S):
        g = basis[k]
        if g[j] >= 1:
            h = list(g)
            h[i] += 1
            h[j] -= 1
            S2 = tuple(sorted(S[:pos] + (index[tuple(h)],) + S[pos + 1:]))
            key = (S2, beta)
            out[key] = out.get(key, 0) - (g[i] + 1)
    b = list(beta)
    if spec.dual:
        if b[j] >= 1:
            coef = -b[j]
            b[j] -= 1
            b[i] += 1
            key = (tuple(S), tuple(b))
            out[key] = out.get(key, 0) + coef
    else:
        if b[i] >= 1:
            coef = b[i]
            b[i] -= 1
            b[j] += 1
            key = (tuple(S), tuple(b))
            out[key] = out.get(key, 0) + coef
    return {k: v for k, v in out.items() if v}


def infinitesimal_action(spec: CovariantSpec, i: int, j: int, columns=None):
    """Matrix of E_ij on the given monomials (default: the whole bihomogeneous space).

    Returns ``(Matrix, row_keys, columns)``.
    """
    if i == j:
        raise ValueError("only off-diagonal generators are supported")
    if columns is None:
        basis, _ = _coeff_basis(spec.n, spec.d)
        columns = [
            (S, b)
            for S in combinations_with_replacement(range(len(basis)), spec.degree)
            for b in monomial_basis(spec.n, spec.order)
        ]
    rows = {}
    entries = []
    for c, (S, b) in enumerate(columns):
        for key, v in apply_generator(spec, i, j, S, b).items():
            r = rows.setdefault(key, len(rows))
            entries.append((r, c, v))
    data = [[QQ(0)] * len(columns) for _ in range(len(rows))]
    for r, c, v in entries:
        data[r][c] = data[r][c] + v
    return Matrix(data, len(columns)), list(rows), columns


@dataclass
class SynthesizedObject:
    spec: CovariantSpec
    terms: dict
    name: str = ""
    anchor: dict = field(default_factory=dict)
    weight: int | None = None

    def evaluate(self, f: Form):
        return evaluate_terms(self.spec, self.terms, f)

    def is_invariant(self) -> bool:
        return is_annihilated(self.spec, self.terms)

    def scaled(self, c):
        return SynthesizedObject(self.spec, {k: v * c for k, v in self.terms.items()}, self.name)


def evaluate_terms(spec: CovariantSpec, terms: dict, f: Form):
    if (f.n, f.d) != (spec.n, spec.d):
        raise WrongSpace(f"expected a form in Q_{spec.n}^{spec.d}, got n={f.n}, d={f.d}")
    basis, _ = _coeff_basis(spec.n, spec.d)
    vals = [f.coeffs.get(m) for m in basis]
    table = {}
    prod_cache = {}
    for (S, b), c in terms.items():
        if any(vals[k] is None for k in S):
            continue
        p = prod_cache.get(S)
        if p is None:
            p = QQ(1)
            for k in S:
                p = p * vals[k]
            prod_cache[S] = p
        x = table.get(b)
        table[b] = c * p if x is None else x + c * p
    if spec.order == 0:
        return normalize_scalar(table.get((0,) * spec.n, QQ(0)))
    return Form(spec.n, spec.order, table, dual=spec.dual)


def is_annihilated(spec: CovariantSpec, terms: dict) -> bool:
    for i in range(spec.n):
        for j in range(spec.n):
            if i == j:
                continue
            acc = {}
            for (S, b), c in terms.items():
                for key, v in apply_generator(spec, i, j, S, b).items():
                    acc[key] = acc.get(key, 0) + c * v
            if any(v for v in acc.values()):
                return False
    return True


@dataclass
class SpaceResult:
    spec: CovariantSpec
    basis: list
    columns: int
    full_dimension: int
    strategy: str
    seconds: float

    @property
    def dimension(self):
        return len(self.basis)


def synthesize_space(
    spec: CovariantSpec,
    direct_budget: int = DEFAULT_DIRECT_BUDGET,
    max_columns: int = DEFAULT_MAX_COLUMNS,
    strategy: str = "auto",
) -> SpaceResult:
    """Exact basis of the (co/contra)variants with the given degree and order."""
    t0 = time.perf_counter()
    if not spec.weight_consistent():
        return SpaceResult(spec, [], 0, spec.full_dimension(), "empty", 0.0)
    cols = weight_block(spec)
    if len(cols) > max_columns:
        raise BudgetExceeded(f"{len(cols)} columns exceed the budget of {max_columns}")
    if strategy == "auto":
        strategy = "direct" if len(cols) <= direct_budget else "modular"
    rows = {}
    for i in range(spec.n - 1):
        for c, (S, b) in enumerate(cols):
            for key, v in apply_generator(spec, i, i + 1, S, b).items():
                row = rows.setdefault((i, key), {})
                row[c] = row.get(c, 0) + v
    row_list = [{c: QQ(v) for c, v in r.items() if v} for r in rows.values()]
    if strategy == "modular":
        from ..linalg.modular import kernel_multimodular

        dense = [[QQ(0)] * len(cols) for _ in row_list]
        for r, row in zip(dense, row_list):
            for c, v in row.items():
                r[c] = v
        vecs = kernel_multimodular(Matrix(dense, len(cols))) if dense else _unit_vectors(len(cols))
    else:
        prow, piv = _rref_sparse(row_list, len(cols))
        vecs = _kernel_from_rref(prow, piv, len(cols))
    basis = []
    for v in vecs:
        terms = {cols[c]: x for c, x in enumerate(v) if x}
        basis.append(SynthesizedObject(spec, terms))
    return SpaceResult(spec, basis, len(cols), spec.full_dimension(), strategy, time.perf_counter() - t0)


def _unit_vectors(n):
    return [tuple(QQ(1) if i == j else QQ(0) for i in range(n)) for j in range(n)]


def _poly_key_vector(value, spec: CovariantSpec):
    """Flatten a scalar or form with Poly coefficients into {(beta, param monomial): QQ}."""
    out = {}
    if spec.order == 0:
        items = [((0,) * spec.n, value)]
    else:
        items = list(value.coeffs.items())
    for b, c in items:
        if isinstance(c, Poly):
            t = c.trimmed()
            for exps, v in t.items():
                out[(b, tuple(zip(t.gens, exps)))] = v
        elif c:
            out[(b, ())] = c
    return out


def anchor(name: str, basis: list, family: Form, target, description: str = "") -> SynthesizedObject:
    """The unique combination of ``basis`` whose restriction to ``family`` equals ``target``."""
    if not basis:
        raise AnchorMismatch(f"{name}: empty basis")
    spec = basis[0].spec
    vecs = [_poly_key_vector(b.evaluate(family), spec) for b in basis]
    tvec = _poly_key_vector(target, spec)
    keys = sorted(set().union(*vecs, tvec), key=repr)
    r = len(basis)
    rows = []
    for k in keys:
        row = {j: v[k] for j, v in enumerate(vecs) if v.get(k)}
        if tvec.get(k):
            row[r] = tvec[k]
        if row:
            rows.append(row)
    restricted, piv_r = _rref_sparse([{j: x for j, x in row.items() if j < r} for row in rows], r)
    if len(piv_r) < r:
        raise AnchorAmbiguous(f"{name}: restriction to the anchor family is not injective ({len(piv_r)} < {r})")
    prow, piv = _rref_sparse(rows, r + 1)
    if r in piv:
        raise AnchorMismatch(f"{name}: the anchor formula is not in the span of the synthesized basis")
    lam = [QQ(0)] * r
    for row, p in zip(prow, piv):
        lam[p] = row.get(r, QQ(0))
    terms = {}
    for l, b in zip(lam, basis):
        if not l:
            continue
        for k, v in b.terms.items():
            terms[k] = terms.get(k, 0) + l * v
    terms = {k: QQ(v) for k, v in terms.items() if v}
    obj = SynthesizedObject(spec, terms, name)
    obj.anchor = {"family": str(family), "formula": str(target), "description": description,
                  "coefficients": [str(x) for x in lam]}
    return obj


def measure_weight(obj: SynthesizedObject, probe: Form, scale: int = 2):
    """Exponent k in Gamma(C.f) = det(C)^(-k) C.Gamma(f) for C = diag(scale, 1, ..., 1)."""
    spec = obj.spec
    n = spec.n
    C = LinearMap(Matrix.diag([QQ(scale)] + [QQ(1)] * (n - 1)))
    lhs = obj.evaluate(apply_linear(probe, C))
    base = obj.evaluate(probe)
    if spec.order == 0:
        rhs = base
        if not rhs:
            return None
        ratio = lhs / rhs
    else:
        rhs = apply_dual_linear(base, C) if spec.dual else apply_linear(base, C)
        if not rhs.coeffs:
            return None
        m = next(iter(rhs.coeffs))
        ratio = lhs.coeff(m) / rhs.coeff(m)
        if lhs != rhs * ratio:
            return None
    ratio = QQ(ratio)
    k = 0
    while ratio.numerator % scale == 0 and ratio != 1 and ratio.denominator == 1:
        ratio /= scale
        k -= 1
    while ratio.denominator % scale == 0 and ratio != 1:
        ratio *= scale
        k += 1
    return k if ratio == 1 else None
