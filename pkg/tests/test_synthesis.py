import pytest

from assocforms.cit.synthesis import (
    CONTRAVARIANT,
    CovariantSpec,
    infinitesimal_action,
    is_annihilated,
    synthesize_space,
    weight_block,
)
from assocforms.errors import BudgetExceeded
from assocforms.forms import monomial_basis


@pytest.mark.parametrize(
    "spec, dim",
    [
        (CovariantSpec(2, 4, 2, 0), 1),
        (CovariantSpec(2, 4, 3, 0), 1),
        (CovariantSpec(2, 4, 1, 4), 1),
        (CovariantSpec(2, 4, 2, 4), 1),
        (CovariantSpec(2, 5, 6, 6), 4),
        (CovariantSpec(3, 3, 3, 3, CONTRAVARIANT), 1),
        (CovariantSpec(2, 5, 8, 0), 2),
    ],
)
def test_space_dimensions(spec, dim):
    space = synthesize_space(spec)
    assert space.dimension == dim
    for obj in space.basis:
        assert is_annihilated(spec, obj.terms)


def test_weight_inconsistent_space_is_empty():
    spec = CovariantSpec(2, 4, 1, 1)
    assert not spec.weight_consistent()
    assert synthesize_space(spec).dimension == 0


def test_identity_covariant_in_kernel():
    spec = CovariantSpec(2, 4, 1, 4)
    M, rows, cols = infinitesimal_action(spec, 0, 1)
    # sum_alpha a_alpha z^alpha: coefficient 1 on each (alpha, alpha) column
    basis = monomial_basis(2, 4)
    vec = [1 if basis[S[0]] == b else 0 for (S, b) in cols]
    assert all(x == 0 for x in M * vec)


def test_e12_prolongation_on_one_monomial():
    # f -> -z2 df/dz1 sends a40 z1^4 to -4 a40 z1^3 z2, so the coordinate a31 picks up -4 a40
    spec = CovariantSpec(2, 4, 1, 4)
    basis = monomial_basis(2, 4)
    i31, i40 = basis.index((3, 1)), basis.index((4, 0))
    M, rows, cols = infinitesimal_action(spec, 0, 1)
    col = cols.index(((i31,), (4, 0)))
    image = {rows[r]: M[r, col] for r in range(M.rows) if M[r, col]}
    assert image == {((i40,), (4, 0)): -4, ((i31,), (3, 1)): 4}


def test_multimodular_strategy_matches_direct():
    spec = CovariantSpec(2, 4, 3, 0)
    direct = synthesize_space(spec, strategy="direct")
    modular = synthesize_space(spec, strategy="modular")
    assert modular.strategy == "modular"
    assert [b.terms for b in direct.basis] == [b.terms for b in modular.basis]


def test_budget():
    spec = CovariantSpec(3, 3, 5, 3, CONTRAVARIANT)
    assert len(weight_block(spec)) == 448
    assert spec.full_dimension() == 20020
    with pytest.raises(BudgetExceeded):
        synthesize_space(spec, max_columns=100)
