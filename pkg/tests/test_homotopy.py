import pytest

from qcat._common import PreconditionError
from qcat.category import cyclic_group, find_category_isomorphism, nerve, ordinal, parallel_pair, walking_idempotent
from qcat.homotopy import (
    are_homotopic,
    constant_homotopy,
    equivalence_via_outer_horns,
    homotopy_category,
    homotopy_classes,
    is_equivalence,
    is_infinity_groupoid,
    right_mapping_space,
)
from qcat.lifting import check_kan
from qcat.sset import codiscrete, horn, validate


@pytest.mark.parametrize("C", [ordinal(2), cyclic_group(2), cyclic_group(3), walking_idempotent(), parallel_pair()], ids=lambda C: C.name)
def test_ho_of_nerve_is_the_category(C):
    ho = homotopy_category(nerve(C, 3))
    assert find_category_isomorphism(C, ho.category) is not None


def test_constant_homotopy_and_relation():
    X = nerve(cyclic_group(2), 3)
    w = constant_homotopy(X, "g1")
    assert w.source == w.target
    assert are_homotopic(X, "g1", "g1") is not None
    assert are_homotopic(X, "g0", "g1") is None


def test_codiscrete_edges_collapse():
    X = codiscrete(["a", "b"], 3)
    part = homotopy_classes(X, "a", "b")
    assert len(part.classes) == 1 and not part.closure_needed


def test_ho_rejects_non_quasicategory():
    with pytest.raises(PreconditionError):
        homotopy_category(horn(2, 1, 3))


def test_equivalences():
    X = nerve(cyclic_group(3), 3)
    assert is_equivalence(X, "g1")
    Y = nerve(ordinal(1), 3)
    assert not is_equivalence(Y, "0<1")
    assert equivalence_via_outer_horns(X, "g1", 3)
    assert not equivalence_via_outer_horns(Y, "0<1", 3)


@pytest.mark.parametrize("C", [ordinal(1), ordinal(2), cyclic_group(2), cyclic_group(3), walking_idempotent(), parallel_pair()], ids=lambda C: C.name)
def test_kan_iff_groupoid(C):
    X = nerve(C, 3)
    assert bool(check_kan(X, 3)) == is_infinity_groupoid(X)


def test_right_mapping_space_of_nerve_is_discrete():
    X = nerve(parallel_pair(), 3)
    H = right_mapping_space(X, "x", "y", 2)
    assert validate(H).ok
    assert H.size(0) == 2
    assert all(len(H.nondegenerate(n)) == 0 for n in (1, 2))
