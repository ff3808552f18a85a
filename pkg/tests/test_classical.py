import pytest

from assocforms.cit.classical import (
    SEMISTABLE,
    STABLE,
    UNSTABLE,
    binary_resultant,
    discriminant,
    j_invariant,
    resultant_discriminant,
    stability_classify,
    transvectant,
)
from assocforms.errors import DegenerateForm, UnsupportedSpace, WrongArity
from assocforms.families import bold_q, c, q, random_form, rng, sylvester_quintic
from assocforms.forms import Form, hessian
from assocforms.parse import parse_form
from assocforms.scalars import QQ


def test_transvectant_examples():
    assert transvectant(q(0), q(0), 4) == Form(2, 0, {(0, 0): 2})
    f, g = random_form(2, 3, rng(0)), random_form(2, 4, rng(1))
    assert transvectant(f, g, 0) == f * g
    assert transvectant(q(0), q(0), 2) * 72 == hessian(q(0))
    with pytest.raises(WrongArity):
        transvectant(c(1), c(1), 1)


def test_discriminants():
    assert discriminant(q(6)) == 64
    assert discriminant(c(0)) == 1
    assert discriminant(sylvester_quintic(1, 1, 1)) == -375
    with pytest.raises(UnsupportedSpace):
        discriminant(random_form(2, 6, rng(2)))
    assert resultant_discriminant(parse_form("(z1 - z2)^2 z1 z2^3", 2)) == 0
    assert discriminant(random_form(2, 6, rng(2)), normalized=False) != 0


def test_resultant_of_linear_forms():
    g = parse_form("z1 + 2 z2", 2)
    h = parse_form("3 z1 - z2", 2)
    assert binary_resultant(g, h) == -7


def test_j_invariant():
    assert j_invariant(q(1)) == QQ(2197, 972)
    assert j_invariant(c(6)) == 0
    t = QQ(7, 2)
    J = j_invariant(q(t))
    assert j_invariant(bold_q(t).as_primal()) == J / (J - 1)
    with pytest.raises(DegenerateForm):
        j_invariant(q(2))


def test_stability():
    assert stability_classify(q(1)) == STABLE
    assert stability_classify(parse_form("z1^2 z2^2", 2)) == SEMISTABLE
    assert stability_classify(parse_form("z1^4", 2)) == UNSTABLE
    assert stability_classify(parse_form("z1 z2 z3", 3)) == SEMISTABLE
    with pytest.raises(UnsupportedSpace):
        stability_classify(random_form(2, 5, rng(3)))
