import json

import pytest

from assocforms.cit import catalogue
from assocforms.cit.classical import transvectant
from assocforms.errors import WrongSpace
from assocforms.families import OMEGA, c, q, random_form, random_sl, random_unipotent, rng, sylvester_quintic, symbols
from assocforms.forms import Form, LinearMap, apply_dual_linear, apply_linear, hessian
from assocforms.linalg.matrix import Matrix
from assocforms.scalars import QQ

COVARIANT_NAMES = ["C51", "C22", "C33", "C44", "C15", "C26"]


@pytest.mark.parametrize("name", list(catalogue.ENTRIES))
def test_entry_is_anchored_and_invariant(name):
    obj = catalogue.get(name)
    assert obj.is_invariant()
    entry = catalogue.ENTRIES[name]
    assert obj.evaluate(entry.family()) == entry.target()
    assert obj.weight == obj.spec.predicted_weight()


def test_anchor_examples():
    t = QQ(5, 3)
    assert catalogue.evaluate("I2", q(t)) == 1 + t * t / 12
    assert catalogue.evaluate("I4", c(6)) == 0
    assert catalogue.evaluate("C26", sylvester_quintic(*symbols("a", "b", "c"))) == hessian(
        sylvester_quintic(*symbols("a", "b", "c"))
    ) * QQ(1, 400)


def test_evaluate_examples():
    assert catalogue.evaluate("I2", q(6)) == 4
    assert catalogue.evaluate("I3", q(6)) == 0
    assert catalogue.evaluate("I6", c(0)) == 1
    assert catalogue.evaluate("I4", c(0)) == 0
    assert catalogue.evaluate("P", c(0)) == Form(3, 3, {(1, 1, 1): -1}, dual=True)
    assert catalogue.evaluate("Q", c(0)) == Form(3, 3, {(3, 0, 0): 1, (0, 3, 0): 1, (0, 0, 3): 1}, dual=True)
    with pytest.raises(WrongSpace):
        catalogue.evaluate("I2", c(0))


def test_relative_invariance_and_weights():
    r = rng(11)
    D = LinearMap(Matrix.diag([QQ(3), QQ(1, 2)]))
    for name in ("I2", "I3"):
        f = random_form(2, 4, r)
        k = catalogue.get(name).weight
        assert catalogue.evaluate(name, apply_linear(f, D)) == catalogue.evaluate(name, f) * D.det() ** -k
        U = random_unipotent(2, r)
        assert catalogue.evaluate(name, apply_linear(f, U)) == catalogue.evaluate(name, f)
    D3 = LinearMap(Matrix.diag([QQ(2), QQ(-1), QQ(5)]))
    for name in ("I4", "I6"):
        f = random_form(3, 3, r)
        k = catalogue.get(name).weight
        assert catalogue.evaluate(name, apply_linear(f, D3)) == catalogue.evaluate(name, f) * D3.det() ** -k
    for name in ("P", "Q"):
        f = random_form(3, 3, r)
        k = catalogue.get(name).weight
        lhs = catalogue.evaluate(name, apply_linear(f, D3))
        assert lhs == apply_dual_linear(catalogue.evaluate(name, f), D3) * D3.det() ** -k


@pytest.mark.parametrize("name", COVARIANT_NAMES)
def test_quintic_covariants_transform(name):
    r = rng(12)
    f = random_form(2, 5, r)
    C = random_sl(2, r)
    assert catalogue.evaluate(name, apply_linear(f, C)) == apply_linear(catalogue.evaluate(name, f), C)


def test_quintic_relation_symbolic():
    f = sylvester_quintic(*symbols("a", "b", "c"))
    C = {k: catalogue.evaluate(k, f) for k in ("C40", "C26", "C15", "C51", "C33", "C22", "C44")}
    rel = C["C40"] * C["C26"] - C["C15"] * C["C51"] + C["C33"] * C["C33"] * 9 - C["C22"] ** 3 + C["C22"] * C["C44"] * 2
    assert rel.is_zero()


def test_sylvester_discriminant_example():
    f = sylvester_quintic(1, 1, 1)
    assert catalogue.evaluate("C40", f) == -3
    assert catalogue.evaluate("C80", f) == 3


def test_transvectant_cross_check():
    r = rng(13)
    for _ in range(20):
        f = random_form(2, 4, r)
        h = transvectant(f, f, 2)
        assert catalogue.evaluate("I2", f) == transvectant(f, f, 4).coeff((0, 0)) / 2
        assert hessian(f) == h * 72
        assert catalogue.evaluate("I3", f) == transvectant(f, h, 4).coeff((0, 0)) / 6


def test_cache_file_format(tmp_path):
    catalogue.set_cache_dir(tmp_path)
    try:
        obj = catalogue.get("I3")
        doc = json.loads((tmp_path / "I3.json").read_text())
        assert doc["spec"] == obj.spec.to_dict()
        assert doc["weight"] == 6
        assert "formula" in doc["anchor"]
        assert len(doc["digest"]) == 64
        catalogue.set_cache_dir(tmp_path)  # drop the in-memory copy
        again = catalogue.get("I3")
        assert again.terms == obj.terms
        # a tampered file is ignored and rebuilt
        doc["terms"][0][2] = "12345"
        (tmp_path / "I3.json").write_text(json.dumps(doc))
        catalogue.set_cache_dir(tmp_path)
        assert catalogue.get("I3").terms == obj.terms
        assert not list(tmp_path.glob("*.tmp"))
    finally:
        catalogue.set_cache_dir(None)


def test_omega_values():
    g = c(OMEGA * 6)
    assert catalogue.evaluate("I4", g) == 0
