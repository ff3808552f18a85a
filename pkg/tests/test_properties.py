"""Property-based checks of the basic invariants of the form algebra."""
import json

from hypothesis import HealthCheck, assume, given, settings
from hypothesis import strategies as st

from assocforms.cit.classical import discriminant
from assocforms.forms import Form, hat, monomial_basis, polar_pair, tilde
from assocforms.milnor import associated_form, equivariance_check, hilbert_function
from assocforms.parse import form_from_document, form_to_document, parse_form, serialize
from assocforms.families import random_unipotent, rng
from assocforms.scalars import QQ

SPACES = [(2, 3), (2, 4), (2, 5), (3, 3)]

fractions = st.builds(QQ, st.integers(-50, 50), st.integers(1, 9))


@st.composite
def forms(draw, spaces=SPACES, dual=False):
    n, d = draw(st.sampled_from(spaces))
    basis = monomial_basis(n, d)
    coeffs = draw(st.lists(fractions, min_size=len(basis), max_size=len(basis)))
    return Form(n, d, dict(zip(basis, coeffs)), dual=dual)


quick = settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])


@quick
@given(forms())
def test_text_round_trip(f):
    assume(not f.is_zero())
    assert parse_form(str(f), f.n, f.d) == f


@quick
@given(forms(dual=True))
def test_dual_text_round_trip(g):
    assume(not g.is_zero())
    assert parse_form(str(g), g.n, g.d) == g


@quick
@given(forms())
def test_document_round_trip(f):
    assert form_from_document(form_to_document(f)) == f
    assert form_from_document(json.dumps(form_to_document(f))) == f
    assert serialize(f) == str(f)


@quick
@given(forms(spaces=[(2, 3), (2, 4), (2, 5), (2, 6)], dual=True))
def test_hat_tilde_inverse(g):
    assert tilde(hat(g)) == g
    assert hat(tilde(hat(g))) == hat(g)


@quick
@given(forms(spaces=[(2, 4), (3, 3)]), forms(spaces=[(2, 4), (3, 3)], dual=True))
def test_pairing_is_bilinear(f, g):
    assume((f.n, f.d) == (g.n, g.d))
    assert polar_pair(g, f * QQ(3)) == polar_pair(g, f) * 3
    assert polar_pair(g, f + f) == polar_pair(g * QQ(2), f)


@settings(max_examples=15, deadline=None)
@given(forms(spaces=[(2, 4), (3, 3), (2, 5)]))
def test_hilbert_function_is_symmetric(f):
    assume(discriminant(f) != 0)
    h = hilbert_function(f)
    assert h == h[::-1] and h[0] == h[-1] == 1


@settings(max_examples=10, deadline=None)
@given(forms(spaces=[(2, 4), (3, 3)]), st.integers(0, 10**6))
def test_equivariance_under_unipotents(f, seed):
    assume(discriminant(f) != 0)
    assert equivariance_check(f, random_unipotent(f.n, rng(seed)))


@settings(max_examples=10, deadline=None)
@given(forms(spaces=[(2, 4)]), st.sampled_from([QQ(2), QQ(-1, 3), QQ(5)]))
def test_scaling_weight(f, s):
    # the Hessian scales by s^n and the gradient products by s
    assume(discriminant(f) != 0)
    assert associated_form(f * s).form == associated_form(f).form * (1 / s**f.n)
