import pytest

from assocforms.cit.classical import discriminant
from assocforms.errors import DegenerateForm, UnsupportedSpace
from assocforms.families import (
    bold_c,
    bold_q,
    c,
    generic_form,
    matrix_rotation_quartic,
    q,
    random_form,
    random_sl,
    random_unipotent,
    rng,
    symbols,
)
from assocforms.forms import Form, LinearMap, apply_linear, hat
from assocforms.linalg.matrix import span_rank
from assocforms.milnor import (
    associated_form,
    build_reduction,
    closed_form_delta_phi,
    delta_phi,
    delta_phi_with_path,
    discriminant_scalar,
    equivariance_check,
    gradient_products,
    hilbert_function,
    hyperplane_defect,
    reduce_to_socle,
    reduction_delta_phi,
    verify_inverse_system,
)
from assocforms.parse import parse_form
from assocforms.poly import Poly
from assocforms.scalars import QQ


def test_gradient_products_of_fermat_quartic():
    prods = gradient_products(q(0))
    assert len(prods) == 4
    assert prods[0] == Form(2, 4, {(4, 0): 4})
    assert span_rank(prods) == 4
    assert span_rank(gradient_products(c(0))) == 9


def test_reduction_system_shapes():
    R = build_reduction(q(0))
    assert (R.N, R.K) == (5, 2) and 2 * R.K == R.N - 1
    assert R.det != 0
    R3 = build_reduction(c(1))
    assert R3.N == 10 and len(R3.products) == 9


def test_reduction_refuses_degenerate():
    with pytest.raises(DegenerateForm):
        build_reduction(parse_form("z1^2 z2^2", 2))


def test_reduce_to_socle_examples():
    R = build_reduction(q(0))
    assert reduce_to_socle(R, Form.monomial((2, 2)))[1] == QQ(1, 144)
    assert reduce_to_socle(R, Form.monomial((4, 0)))[1] == 0
    alphas, gamma = reduce_to_socle(R, Form.monomial((3, 1)))
    assert gamma == 0
    R3 = build_reduction(c(0))
    assert reduce_to_socle(R3, Form.monomial((1, 1, 1)))[1] == QQ(1, 216)


def test_reduction_decomposition_is_exact():
    f = random_form(2, 5, rng(5))
    R = build_reduction(f)
    g = random_form(2, 6, rng(6))
    alphas, gamma = reduce_to_socle(R, g)
    total = R.hessian * gamma
    for a, e in zip(alphas, R.product_forms):
        total = total + e * a
    assert total == g


def test_associated_form_examples():
    assert associated_form(q(0)).form == Form(2, 4, {(2, 2): QQ(1, 24)}, dual=True)
    assert associated_form(c(0)).form == Form(3, 3, {(1, 1, 1): QQ(1, 36)}, dual=True)
    for t in (QQ(1), QQ(-5, 3), QQ(9)):
        assert associated_form(q(t)).form == bold_q(t)
        assert associated_form(c(t)).form == bold_c(t)


def test_olddef_avatar_has_same_coefficients():
    af = associated_form(q(QQ(3)))
    assert af.olddef.coeffs == af.form.coeffs and not af.olddef.dual


def test_hyperplane_property():
    for f in (q(QQ(1)), c(QQ(2)), random_form(2, 5, rng(7)), random_form(2, 6, rng(8))):
        assert hyperplane_defect(f)


def test_hilbert_functions():
    assert hilbert_function(q(0)) == (1, 2, 3, 2, 1)
    assert hilbert_function(c(0)) == (1, 3, 3, 1)
    h = hilbert_function(random_form(2, 5, rng(9)))
    assert h == (1, 2, 3, 4, 3, 2, 1)
    assert h == h[::-1]


def test_inverse_system():
    assert verify_inverse_system(q(0))
    assert verify_inverse_system(c(0))
    g = apply_linear(q(QQ(1)), random_sl(2, rng(10)))
    assert verify_inverse_system(g)


def test_delta_phi_examples():
    assert delta_phi(q(0)) == Form(2, 4, {(2, 2): QQ(1, 24)}, dual=True)
    assert hat(delta_phi(q(1))) == q(-12) * QQ(-1, 384)
    value, path = delta_phi_with_path(parse_form("z1^2 z2^2", 2))
    assert path == "closed-form" and value.is_zero()
    assert delta_phi(q(QQ(7)), "both") == delta_phi(q(QQ(7)), "closed-form")
    with pytest.raises(DegenerateForm):
        delta_phi(parse_form("z1^2 z2^2", 2), "reduction")
    with pytest.raises(UnsupportedSpace):
        delta_phi(random_form(2, 6, rng(0)))


def test_closed_forms_agree_with_reduction():
    r = rng(14)
    for (n, d) in ((2, 4), (3, 3), (2, 5)):
        f = random_form(n, d, r)
        assert reduction_delta_phi(f) == closed_form_delta_phi(f)


def test_symbolic_delta_phi_is_polynomial():
    (t,) = symbols("t")
    G = reduction_delta_phi(q(t))
    assert all(isinstance(v, Poly) for v in G.coeffs.values())
    assert G.coeff((2, 2)) == Poly.gen("t") ** 2 * QQ(-1, 96) + QQ(1, 24)
    assert G.coeff((4, 0)) == G.coeff((0, 4))
    s = QQ(5, 7)
    assert G.subs_params({"t": s}) == delta_phi(q(s))


def test_equivariance():
    assert equivariance_check(q(1), LinearMap.identity(2))
    assert equivariance_check(q(1), matrix_rotation_quartic())
    assert equivariance_check(c(1), random_unipotent(3, rng(15)))


def test_discriminant_scalars():
    assert discriminant_scalar(4) == 36864
    assert discriminant_scalar(5) == -6250000
    assert discriminant_scalar(3) == -4
    f = generic_form(2, 4)
    assert build_reduction(f).det == discriminant(f) * 36864
