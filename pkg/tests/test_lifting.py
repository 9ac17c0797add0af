import pytest

from qcat._common import Budget, BudgetExceeded
from qcat.category import cyclic_group, nerve, ordinal, parallel_pair
from qcat.lifting import (
    HornInstance,
    check_kan,
    check_quasicategory,
    check_unique_inner_fillers,
    enumerate_horns,
    find_fillers,
    has_rlp,
    horn_is_compatible,
)
from qcat.sset import (
    boundary_inclusion,
    codiscrete,
    horn,
    horn_inclusion,
    identity_map,
    point,
    standard_simplex,
)


def test_standard_simplex_is_quasicategory_not_kan():
    D = standard_simplex(2, 3)
    assert check_quasicategory(D, 3).kind == "quasicategory"
    v = check_kan(D, 3)
    assert not v
    assert v.failure_witness.dim == 2


def test_codiscrete_is_kan():
    X = codiscrete(["a", "b", "c"], 3)
    assert check_kan(X, 3).kind == "kan"


def test_horn_is_not_a_quasicategory():
    X = horn(2, 1, 2)
    v = check_quasicategory(X, 2)
    assert not v
    h = v.failure_witness
    assert (h.dim, h.missing_face) == (2, 1)
    assert "Lambda^2_1" in v.render(X)


def test_multiplicity_witness_on_parallel_fillers():
    X = codiscrete(["a", "b"], 2)
    v = check_unique_inner_fillers(X, 2)
    assert v.kind == "nerve_like"  # codiscrete fillers are unique
    Y = nerve(parallel_pair(), 3)
    assert check_unique_inner_fillers(Y, 3).kind == "nerve_like"


def test_enumerate_horns_and_fillers():
    X = nerve(ordinal(2), 3)
    horns = enumerate_horns(X, 2, 1)
    assert horns
    for h in horns:
        assert horn_is_compatible(X, h)
        assert len(find_fillers(X, h)) == 1
    with pytest.raises(ValueError):
        enumerate_horns(X, 2, 3)


def test_incompatible_horn_is_rejected():
    X = nerve(ordinal(1), 2)
    f = X.index(1, "0<1")
    assert not horn_is_compatible(X, HornInstance(2, 1, (f, None, f)))


def test_rlp_of_identity_and_projection():
    X = nerve(cyclic_group(2), 3)
    assert has_rlp(identity_map(X), "all_horns", 3)
    to_point = identity_map(point(2))
    assert has_rlp(to_point, "boundaries", 2)


def test_rlp_fails_for_boundary_inclusion():
    i = boundary_inclusion(1, 1)
    v = has_rlp(i, "boundaries", 1)
    assert not v
    assert v.witness.dim == 1
    with pytest.raises(ValueError):
        has_rlp(i, "cells", 1)


def test_horn_inclusion_lacks_inner_rlp():
    v = has_rlp(horn_inclusion(2, 1, 2), "inner_horns", 2)
    assert not v


def test_budget_exceeded():
    X = codiscrete(["a", "b", "c", "d"], 3)
    with pytest.raises(BudgetExceeded):
        check_kan(X, 3, Budget(max_nodes=10))
