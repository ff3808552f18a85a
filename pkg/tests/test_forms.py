import pytest

from assocforms.errors import DegreeMismatch, IncompatibleRadicalScale, WrongArity
from assocforms.families import matrix_rotation_quartic, q, random_form, random_sl, rng
from assocforms.forms import (
    Form,
    LinearMap,
    apolar_apply,
    apply_contragredient,
    apply_dual_linear,
    apply_linear,
    euler_residual,
    hat,
    hessian,
    monomial_basis,
    multinomial,
    partial_derivative,
    polar_pair,
    tilde,
)
from assocforms.linalg.matrix import Matrix
from assocforms.scalars import QQ


def test_monomial_basis_order_and_size():
    assert monomial_basis(2, 2) == [(2, 0), (1, 1), (0, 2)]
    assert len(monomial_basis(3, 3)) == 10
    assert multinomial((2, 1, 1)) == 12


def test_degree_is_checked():
    with pytest.raises(DegreeMismatch):
        Form(2, 4, {(3, 0): 1})
    with pytest.raises(DegreeMismatch):
        Form(2, 4, {(4, 0): 1}) + Form(2, 3, {(3, 0): 1})


def test_hessian_of_fermat_quartic():
    assert hessian(q(0)) == Form(2, 4, {(2, 2): 144})


def test_euler_identity():
    f = random_form(3, 3, rng(0))
    assert euler_residual(f).is_zero()


def test_partial_derivative():
    f = Form(2, 3, {(2, 1): 5})
    assert partial_derivative(f, 0) == Form(2, 2, {(1, 1): 10})


def test_apolar_apply_and_polar_pair():
    x4 = Form(2, 4, {(4, 0): 1})
    assert apolar_apply(x4, x4) == Form(2, 0, {(0, 0): 24})
    g = Form(2, 4, {(2, 2): QQ(1, 24)}, dual=True)
    assert polar_pair(g, Form(2, 4, {(2, 2): 1})) == QQ(1, 6)


def test_hat_and_tilde_are_inverse():
    f = random_form(2, 4, rng(1))
    assert hat(tilde(f)) == f
    g = tilde(f)
    assert tilde(hat(g)) == g
    with pytest.raises(WrongArity):
        hat(Form(3, 1, {(1, 0, 0): 1}, dual=True))


def test_linear_action_is_a_left_action():
    r = rng(2)
    f = random_form(2, 4, r)
    A, B = random_sl(2, r), random_sl(2, r)
    assert apply_linear(apply_linear(f, B), A) == apply_linear(f, A * B)
    g = f.as_dual()
    assert apply_dual_linear(apply_dual_linear(g, B), A) == apply_dual_linear(g, A * B)


def test_action_preserves_pairing():
    r = rng(3)
    f = random_form(2, 4, r)
    g = random_form(2, 4, r).as_dual()
    C = random_sl(2, r)
    assert polar_pair(apply_dual_linear(g, C), apply_linear(f, C)) == polar_pair(g, f)


def test_dual_action_of_a_diagonal_map():
    C = LinearMap(Matrix([[2, 0], [0, QQ(1, 2)]]))
    assert apply_dual_linear(Form(2, 2, {(1, 1): 1}, dual=True), C) == Form(2, 2, {(1, 1): 1}, dual=True)
    # the dual action inverts the primal one: z1^2 scales by 1/4, z1*^2 by 4
    assert apply_linear(Form(2, 2, {(2, 0): 1}), C) == Form(2, 2, {(2, 0): QQ(1, 4)})
    assert apply_dual_linear(Form(2, 2, {(2, 0): 1}, dual=True), C) == Form(2, 2, {(2, 0): 4}, dual=True)


def test_contragredient_matches_inverse_transpose():
    C = LinearMap(Matrix([[2, 1], [1, 1]]))
    f = Form(2, 1, {(1, 0): 1})
    assert apply_contragredient(f, C) == apply_linear(f, C.inverse().transpose())


def test_radical_scale():
    M = matrix_rotation_quartic()
    assert M.det() == 1
    assert apply_linear(q(1), M) == q(QQ(10, 3)) * QQ(3, 4)
    with pytest.raises(IncompatibleRadicalScale):
        M.scale_power(1)


def test_hessian_covariance():
    r = rng(4)
    f = random_form(2, 4, r)
    C = LinearMap(Matrix([[2, 1], [0, 1]]))
    assert hessian(apply_linear(f, C)) == apply_linear(hessian(f), C) * C.det() ** -2
