import pytest
from hypothesis import given, settings, strategies as st

from qcat.category import (
    cone_category,
    cyclic_group,
    discrete_category,
    find_category_isomorphism,
    group_category,
    nerve,
    ordinal,
    parallel_pair,
    poset_category,
    recognize_nerve,
    terminal_category,
    walking_idempotent,
    with_composite,
)
from qcat.lifting import check_unique_inner_fillers
from qcat.sset import validate

CORPUS = [ordinal(2), cyclic_group(2), cyclic_group(3), walking_idempotent(), parallel_pair(), discrete_category(["a", "b"])]


@pytest.mark.parametrize("C", CORPUS, ids=lambda C: C.name)
def test_corpus_is_lawful_and_nerve_valid(C):
    assert C.validate().ok
    X = nerve(C, 3)
    assert validate(X).ok
    assert check_unique_inner_fillers(X, 3)


@pytest.mark.parametrize("C", CORPUS, ids=lambda C: C.name)
def test_recognize_recovers_category(C):
    D = recognize_nerve(nerve(C, 3))
    assert D is not None
    assert find_category_isomorphism(C, D) is not None


def test_nerve_level_counts():
    X = nerve(cyclic_group(3), 3)
    assert X.sizes() == (1, 3, 9, 27)
    Y = nerve(ordinal(2), 3)
    assert Y.sizes() == (3, 6, 10, 15)


def test_poset_closure_and_antisymmetry():
    P = poset_category(["a", "b", "c"], [("a", "b"), ("b", "c")])
    assert P.hom("a", "c") == ["a<c"]
    with pytest.raises(ValueError):
        poset_category(["a", "b"], [("a", "b"), ("b", "a")])


def test_corrupted_table_is_caught():
    C = with_composite(cyclic_group(3), "g1", "g1", "g0")
    assert not C.validate().ok
    X = nerve(C, 3)
    assert validate(X).ok
    v = check_unique_inner_fillers(X, 3)
    assert not v
    assert v.failure_witness.dim == 3


def test_isos_and_inverses():
    G = cyclic_group(3)
    assert all(G.is_iso(g) for g in G.morphisms)
    assert G.compose(G.inverse("g1"), "g1") == "g0"
    E = walking_idempotent()
    assert not E.is_iso("e")
    assert not ordinal(1).is_iso("0<1")


def test_cone_category_has_terminal_apex():
    K = cone_category(discrete_category(["a", "b"]))
    assert K.validate().ok
    assert all(len(K.hom(a, "inf")) == 1 for a in K.objects)


def test_isomorphism_search_distinguishes():
    assert find_category_isomorphism(cyclic_group(2), walking_idempotent()) is None
    assert find_category_isomorphism(terminal_category(), ordinal(0)) is not None


@settings(max_examples=25, deadline=None)
@given(st.integers(1, 5))
def test_cyclic_groups_are_lawful(n):
    G = cyclic_group(n)
    assert G.validate().ok
    assert len(G.morphisms) == n


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3))
def test_ordinal_nerve_is_standard_simplex_count(n, N):
    from math import comb

    X = nerve(ordinal(n), N)
    assert X.sizes() == tuple(comb(n + k + 1, k + 1) for k in range(N + 1))


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 1))
def test_two_element_monoids_have_nerves(square):
    # unit 0; the only free entry is 1 * 1
    def mult(a, b):
        if a == 0:
            return b
        if b == 0:
            return a
        return square

    C = group_category([0, 1], mult, 0)
    assert C.validate().ok
    assert check_unique_inner_fillers(nerve(C, 3), 3)
