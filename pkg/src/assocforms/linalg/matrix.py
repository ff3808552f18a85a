"""Dense exact matrices over any scalar domain (Q, Q(w), Q[params] and its fractions)."""
from __future__ import annotations

from itertools import permutations

from ..errors import DomainMismatch, NotSquare, SingularSystem
from ..scalars import QQ, DOMAIN_Q, domain_of, exact_div, join_domains, normalize_scalar, qq


def _zero(x) -> bool:
    return not x


class Matrix:
    """Row-major matrix of exact scalars; treated as immutable."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data, cols=None):
        data = [list(map(_norm, r)) for r in data]
        self.rows = len(data)
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(r) != cols for r in data):
            raise ValueError("ragged matrix")
        self.cols = cols
        self.data = data

    @classmethod
    def identity(cls, n):
        return cls([[QQ(1) if i == j else QQ(0) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows, cols):
        return cls([[QQ(0)] * cols for _ in range(rows)], cols)

    @classmethod
    def diag(cls, entries):
        n = len(entries)
        return cls([[entries[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns, rows=None):
        if not columns:
            return cls([[] for _ in range(rows or 0)], 0)
        return cls([list(r) for r in zip(*columns)])

    @property
    def shape(self):
        return self.rows, self.cols

    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def row(self, i):
        return list(self.data[i])

    def column(self, j):
        return [r[j] for r in self.data]

    def tolist(self):
        return [list(r) for r in self.data]

    def transpose(self):
        return Matrix([list(c) for c in zip(*self.data)] if self.rows else [], self.rows)

    T = property(transpose)

    def domain(self):
        dom = DOMAIN_Q
        for r in self.data:
            for x in r:
                dom = join_domains(dom, domain_of(x))
        return dom

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch in matrix product")
            oc = other.transpose().data if other.rows else [[] for _ in range(other.cols)]
            return Matrix([[_dot(r, c) for c in oc] for r in self.data], other.cols)
        if isinstance(other, (list, tuple)):
            return [normalize_scalar(_dot(r, other)) for r in self.data]
        return Matrix([[x * other for x in r] for r in self.data], self.cols)

    def __rmul__(self, other):
        return Matrix([[other * x for x in r] for r in self.data], self.cols)

    def __add__(self, other):
        return Matrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)], self.cols)

    def __sub__(self, other):
        return Matrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.data, other.data)], self.cols)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.data, other.data) for a, b in zip(r, s)
        )

    __hash__ = None

    def map(self, fn):
        return Matrix([[fn(x) for x in r] for r in self.data], self.cols)

    def __repr__(self):
        return f"Matrix({[[str(x) for x in r] for r in self.data]})"


def _norm(x):
    if isinstance(x, (int, str)):
        return qq(x)
    return normalize_scalar(x)


def _dot(r, c):
    total = QQ(0)
    for a, b in zip(r, c):
        if a and b:
            total = total + a * b
    return normalize_scalar(total)


def _as_matrix(M):
    return M if isinstance(M, Matrix) else Matrix(M)


# -- elimination --------------------------------------------------------------------
def _rref_sparse(rows: list, ncols: int):
    """Gauss-Jordan on rows given as {col: value} dicts over a field."""
    rows = [dict(r) for r in rows if r]
    pivot_rows = []
    pivots = []
    remaining = rows
    for c in range(ncols):
        cand = [i for i, r in enumerate(remaining) if c in r]
        if not cand:
            continue
        best = min(cand, key=lambda i: len(remaining[i]))
        prow = remaining.pop(best)
        inv = QQ(1) / prow[c]
        if prow[c] != 1:
            prow = {k: normalize_scalar(v * inv) for k, v in prow.items()}
        # eliminate c from every other row (earlier pivots and remaining rows)
        for group in (pivot_rows, remaining):
            for idx, r in enumerate(group):
                f = r.get(c)
                if f is None:
                    continue
                for k, v in prow.items():
                    x = r.get(k)
                    y = normalize_scalar((x if x is not None else 0) - f * v)
                    if y:
                        r[k] = y
                    elif x is not None:
                        del r[k]
        remaining = [r for r in remaining if r]
        pivot_rows.append(prow)
        pivots.append(c)
        if not remaining:
            break
    return pivot_rows, pivots


def _to_sparse(M: Matrix):
    return [{j: x for j, x in enumerate(r) if x} for r in M.data]


def rref(M):
    """Reduced row echelon form and the (strictly increasing) pivot columns."""
    M = _as_matrix(M)
    prow, pivots = _rref_sparse(_to_sparse(M), M.cols)
    data = [[r.get(j, QQ(0)) for j in range(M.cols)] for r in prow]
    data += [[QQ(0)] * M.cols for _ in range(M.rows - len(prow))]
    return Matrix(data, M.cols), pivots


def rank(M) -> int:
    M = _as_matrix(M)
    return len(_rref_sparse(_to_sparse(M), M.cols)[1])


def kernel(M) -> list:
    """Null-space basis; each vector has first nonzero entry 1."""
    M = _as_matrix(M)
    prow, pivots = _rref_sparse(_to_sparse(M), M.cols)
    return _kernel_from_rref(prow, pivots, M.cols)


def _kernel_from_rref(prow, pivots, ncols):
    pset = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pset:
            continue
        v = [QQ(0)] * ncols
        v[f] = QQ(1)
        for r, p in zip(prow, pivots):
            x = r.get(f)
            if x:
                v[p] = normalize_scalar(-x)
        lead = next(x for x in v if x)
        if lead != 1:
            v = [normalize_scalar(x / lead) for x in v]
        basis.append(tuple(v))
    return basis


def determinant(M, method: str = "bareiss"):
    M = _as_matrix(M)
    if not M.is_square():
        raise NotSquare(f"determinant of a {M.rows}x{M.cols} matrix")
    if method == "cofactor":
        return cofactor_determinant(M)
    if method == "modular":
        from .modular import det_multimodular

        return det_multimodular(M)
    return bareiss_determinant(M)


def bareiss_determinant(M):
    """Fraction-free elimination; every division is exact in the coefficient ring."""
    M = _as_matrix(M)
    n = M.rows
    if n == 0:
        return QQ(1)
    a = M.tolist()
    sign = 1
    prev = QQ(1)
    for k in range(n - 1):
        if _zero(a[k][k]):
            swap = next((i for i in range(k + 1, n) if not _zero(a[i][k])), None)
            if swap is None:
                return QQ(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = a[i][j] * akk - aik * a[k][j]
                a[i][j] = normalize_scalar(exact_div(num, prev)) if num else QQ(0)
            a[i][k] = QQ(0)
        prev = akk
    det = a[n - 1][n - 1]
    return normalize_scalar(det if sign > 0 else -det)


def cofactor_determinant(M):
    """Leibniz expansion; only meant as an oracle for small matrices."""
    M = _as_matrix(M)
    n = M.rows
    total = QQ(0)
    for perm in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = QQ(1)
        for i in range(n):
            term = term * M.data[i][perm[i]]
            if not term:
                break
        if term:
            total = total - term if inv % 2 else total + term
    return normalize_scalar(total)


def solve(M, b) -> tuple:
    """Unique solution of M x = b over the fraction field of the entries."""
    M = _as_matrix(M)
    if not M.is_square():
        raise NotSquare("solve needs a square matrix")
    n = M.rows
    rows = [{j: x for j, x in enumerate(r) if x} for r in M.data]
    for i, bi in enumerate(b):
        bi = _norm(bi)
        if bi:
            rows[i][n] = bi
    prow, pivots = _rref_sparse(rows, n + 1)
    if pivots[:n] != list(range(n)) or len(pivots) > n:
        raise SingularSystem("matrix is singular")
    return tuple(r.get(n, QQ(0)) for r in prow)


def solve_fraction_free(M, b):
    """Return (D, y) with D = det M and y = D * M^-1 b, all in the entry ring.

    Uses one Bareiss pass on the augmented matrix followed by fraction-free
    back substitution, so polynomial entries stay polynomial.
    """
    M = _as_matrix(M)
    n = M.rows
    a = [list(r) + [_norm(bi)] for r, bi in zip(M.tolist(), b)]
    sign = 1
    prev = QQ(1)
    for k in range(n):
        if _zero(a[k][k]):
            swap = next((i for i in range(k + 1, n) if not _zero(a[i][k])), None)
            if swap is None:
                raise SingularSystem("matrix is singular")
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n + 1):
                num = a[i][j] * akk - aik * a[k][j]
                a[i][j] = normalize_scalar(exact_div(num, prev)) if num else QQ(0)
            a[i][k] = QQ(0)
        prev = akk
    det = a[n - 1][n - 1]
    # after Bareiss, row k is the k-th leading minor row: solve U x = c with
    # x_i = y_i / det, y_i = (det*c_i - sum_j u_ij y_j) / u_ii exactly
    y = [QQ(0)] * n
    for i in range(n - 1, -1, -1):
        num = det * a[i][n]
        for j in range(i + 1, n):
            if a[i][j] and y[j]:
                num = num - a[i][j] * y[j]
        y[i] = normalize_scalar(exact_div(num, a[i][i])) if num else QQ(0)
    if sign < 0:
        det = -det
        y = [-v for v in y]
    return normalize_scalar(det), tuple(normalize_scalar(v) for v in y)


def inverse(M):
    M = _as_matrix(M)
    n = M.rows
    rows = []
    for i, r in enumerate(M.data):
        d = {j: x for j, x in enumerate(r) if x}
        d[n + i] = QQ(1)
        rows.append(d)
    prow, pivots = _rref_sparse(rows, 2 * n)
    if pivots[:n] != list(range(n)):
        raise SingularSystem("matrix is not invertible")
    return Matrix([[r.get(n + j, QQ(0)) for j in range(n)] for r in prow[:n]])


def subspace_equal(S1, S2) -> bool:
    """Whether two lists of forms span the same subspace (rank test)."""
    from ..forms import monomial_basis

    forms = list(S1) + list(S2)
    if not forms:
        return True
    n, d, dual = forms[0].n, forms[0].d, forms[0].dual
    if any((f.n, f.d, f.dual) != (n, d, dual) for f in forms):
        raise DomainMismatch("subspace_equal needs one ambient space")
    basis = monomial_basis(n, d)
    v1 = [f.coefficient_vector(basis) for f in S1]
    v2 = [f.coefficient_vector(basis) for f in S2]
    r1 = rank(Matrix(v1, len(basis))) if v1 else 0
    r2 = rank(Matrix(v2, len(basis))) if v2 else 0
    if r1 != r2:
        return False
    return rank(Matrix(v1 + v2, len(basis))) == r1


def span_rank(forms) -> int:
    from ..forms import monomial_basis

    forms = list(forms)
    if not forms:
        return 0
    basis = monomial_basis(forms[0].n, forms[0].d)
    return rank(Matrix([f.coefficient_vector(basis) for f in forms], len(basis)))
