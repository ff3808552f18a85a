import numpy as np
import pytest

from assocforms.errors import NotSquare, SingularSystem
from assocforms.kernels import BACKEND, get_backend
from assocforms.linalg import modular
from assocforms.linalg.matrix import (
    Matrix,
    bareiss_determinant,
    cofactor_determinant,
    determinant,
    inverse,
    kernel,
    rank,
    solve,
    solve_fraction_free,
)
from assocforms.poly import Poly
from assocforms.scalars import QQ


def hilbert(n):
    return Matrix([[QQ(1, i + j + 1) for j in range(n)] for i in range(n)])


def test_determinant_methods_agree():
    H = hilbert(5)
    d = bareiss_determinant(H)
    assert d == QQ(1, 266716800000)
    assert cofactor_determinant(H) == d
    assert modular.det_multimodular(H) == d
    assert determinant(H, method="modular") == d


def test_singular_and_nonsquare():
    M = Matrix([[1, 2], [2, 4]])
    assert determinant(M) == 0
    with pytest.raises(SingularSystem):
        solve(M, [1, 1])
    with pytest.raises(NotSquare):
        determinant(Matrix([[1, 2, 3]]))


def test_solve_and_inverse():
    M = Matrix([[2, 1, 0], [1, 3, 1], [0, 1, 4]])
    x = solve(M, [1, 2, 3])
    assert M * list(x) == [QQ(1), QQ(2), QQ(3)]
    assert M * inverse(M) == Matrix.identity(3)


def test_fraction_free_with_polynomials():
    t = Poly.gen("t")
    M = Matrix([[t, 1], [1, t]])
    D, y = solve_fraction_free(M, [1, 0])
    assert D == t * t - 1
    assert y == (t, -1)


def test_kernel_and_rank():
    M = Matrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert rank(M) == 2
    (v,) = kernel(M)
    assert M * list(v) == [0, 0, 0]
    assert v[0] == 1


def test_multimodular_kernel_matches_exact():
    rows = [[QQ(i * j + 1, j + 2) if (i + j) % 3 else QQ(0) for j in range(7)] for i in range(4)]
    M = Matrix(rows)
    assert modular.kernel_multimodular(M) == kernel(M)


def test_rational_reconstruction():
    m = 1000003 * 998244353
    x = QQ(-17, 91)
    a = int(x.numerator) * pow(int(x.denominator), -1, m) % m
    assert modular.rational_reconstruct(a, m) == x


@pytest.mark.parametrize("name", ["python", "cython"])
def test_kernel_backends_agree(name):
    if name == "cython" and BACKEND != "cython":
        pytest.skip("compiled kernels not built")
    impl = get_backend(name)
    ref = get_backend("python")
    p = 2147483647
    rng = np.random.default_rng(0)
    a = rng.integers(0, p, size=(6, 9), dtype=np.int64)
    a[3] = (a[1] + a[2]) % p
    red, piv = impl.rref_mod(a, p)
    red2, piv2 = ref.rref_mod(a, p)
    assert list(piv) == list(piv2) and len(piv) == 5
    assert np.array_equal(np.asarray(red), np.asarray(red2))
    sq = rng.integers(0, p, size=(5, 5), dtype=np.int64)
    assert impl.det_mod(sq, p) == ref.det_mod(sq, p)
    t1 = {1: QQ(2), 5: QQ(-1)}
    t2 = {2: QQ(3), 3: QQ(1, 2)}
    assert impl.mul_terms(t1, t2) == ref.mul_terms(t1, t2)
