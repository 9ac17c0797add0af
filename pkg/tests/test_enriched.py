import pytest

from qcat.category import cyclic_group, find_category_isomorphism, nerve, ordinal, parallel_pair
from qcat.enriched import (
    arrow_category,
    codiscrete_monoid_category,
    coherent_nerve,
    components,
    discrete_simplicial_category,
    dk_pi0_check,
    enumerate_coherent_simplices,
    group_nerve_category,
    identity_functor,
    is_locally_kan,
    nondegenerate_table,
    path_poset,
    pi0_change_of_base,
    thickened_simplex,
)
from qcat.lifting import check_quasicategory
from qcat.sset import codiscrete, find_isomorphism, standard_simplex, validate


def test_path_posets():
    assert len(path_poset(0, 3)) == 4
    assert len(path_poset(1, 1)) == 1
    with pytest.raises(ValueError):
        path_poset(2, 1)


def test_thickened_simplex_is_lawful():
    for n in range(4):
        C = thickened_simplex(n, 2)
        assert C.validate() == []


def test_thickened_simplex_three_cube():
    C = thickened_simplex(3, 2)
    H = C.hom(0, 3)
    assert len(H.nondegenerate(0)) == 4
    assert len(H.nondegenerate(2)) == 2  # two chains of length 2 in the square


def test_thickened_two_table():
    C = thickened_simplex(2, 2)
    assert nondegenerate_table(C, 0, 2) == {0: ["02", "012"], 1: ["02<012"]}
    assert nondegenerate_table(C, 0, 1) == {0: ["01"]}


def test_discrete_coherent_nerve_matches_nerve():
    for C in [ordinal(2), cyclic_group(2), parallel_pair()]:
        S = discrete_simplicial_category(C, 2)
        assert S.validate() == []
        assert find_isomorphism(coherent_nerve(S, 3), nerve(C, 3)) is not None


def test_coherent_nerve_of_locally_kan_is_quasicategory():
    G = group_nerve_category(cyclic_group(2), 2)
    assert is_locally_kan(G, 2)
    X = coherent_nerve(G, 3)
    assert validate(X).ok
    assert check_quasicategory(X, 3)


def test_codiscrete_monoid_category():
    C = codiscrete_monoid_category([0, 1], lambda a, b: (a + b) % 2, 0, 2)
    assert C.validate() == []
    assert is_locally_kan(C, 2)
    assert check_quasicategory(coherent_nerve(C, 3), 3)


def test_not_locally_kan_detected():
    C = arrow_category(standard_simplex(1, 2))
    v = is_locally_kan(C, 2)
    assert not v and v.witness[0] == ("x", "y")


def test_group_nerve_needs_abelian():
    from qcat.category import group_category

    # S3 as permutations of (0, 1, 2)
    import itertools

    perms = list(itertools.permutations(range(3)))
    G = group_category(
        ["".join(map(str, p)) for p in perms],
        lambda a, b: "".join(str(int(a[int(b[i])])) for i in range(3)),
        "012",
    )
    with pytest.raises(ValueError):
        group_nerve_category(G, 2)


def test_pi0_and_components():
    H = codiscrete(["a", "b"], 2)
    assert len(set(components(H))) == 1
    C = arrow_category(standard_simplex(1, 2))
    P = pi0_change_of_base(C)
    assert P.validate().ok
    assert len(P.hom("x", "y")) == 1


def test_pi0_of_discrete_is_category():
    C = parallel_pair()
    P = pi0_change_of_base(discrete_simplicial_category(C, 1))
    assert find_category_isomorphism(C, P) is not None


def test_identity_functor_is_dk_at_pi0():
    C = thickened_simplex(2, 2)
    F = identity_functor(C)
    assert F.validate() == []
    assert dk_pi0_check(F).ok


def test_coherent_simplices_of_point():
    C = discrete_simplicial_category(ordinal(0), 2)
    assert len(enumerate_coherent_simplices(C, 2, 1)) == 1
