import pytest

from assocforms.errors import DegreeMismatch, ParseError
from assocforms.families import c, q
from assocforms.parse import form_from_document, form_to_document, parse_form, parse_scalar, serialize
from assocforms.poly import Poly
from assocforms.scalars import QQ, QOmega


def test_quartic_and_aliases():
    assert parse_form("z1^4 + 3 z1^2 z2^2 + z2^4", 2) == q(3)
    assert parse_form("x^3+y^3+z^3+6 x y z", 3) == c(6)


def test_inhomogeneous_rejected():
    with pytest.raises(DegreeMismatch):
        parse_form("z1^4 + z2^3", 2, 4)
    with pytest.raises(DegreeMismatch):
        parse_form("z1^4 + z2^3", 2)


def test_parse_error_position():
    with pytest.raises(ParseError) as info:
        parse_form("z1^4 + + ", 2)
    assert info.value.position is not None
    with pytest.raises(ParseError):
        parse_form("z1^2 / z2", 2)
    with pytest.raises(ParseError):
        parse_form("z3^2", 2)


def test_dual_forms_and_rationals():
    g = parse_form("(1/24) z1*^2 z2*^2", 2)
    assert g.dual and g.coeff((2, 2)) == QQ(1, 24)
    assert parse_form("z1*z2", 2) == parse_form("z1 z2", 2)


def test_omega_and_params():
    f = parse_form("z1^3 + w z2^3", 2, domain="qw")
    assert f.coeff((0, 3)) == QOmega(0, 1)
    t = Poly.gen("t")
    assert parse_form("z1^4 + t z1^2 z2^2 + z2^4", 2, domain="params") == q(t)
    with pytest.raises(ParseError):
        parse_form("z1^3 + w z2^3", 2)


def test_serialization_roundtrips():
    for f in (q(QQ(-7, 3)), c(2), parse_form("(1/24) z1*^2 z2*^2", 2)):
        assert parse_form(serialize(f), f.n) == f
        assert form_from_document(form_to_document(f)) == f


def test_coefficient_document():
    doc = {"n": 2, "d": 4, "coeffs": {"4,0": "1", "2,2": "3", "0,4": "1"}}
    assert form_from_document(doc) == q(3)
    assert parse_scalar("-3/9") == QQ(-1, 3)
