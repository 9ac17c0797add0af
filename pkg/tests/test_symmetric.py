import pytest
from hypothesis import given, settings, strategies as st

from qcat._common import Budget, BudgetExceeded, PreconditionError
from qcat.monoidal import (
    categorical_group,
    discrete_group_monoidal,
    is_commutative_monoid,
    matrix_category,
    max_poset_monoidal,
    symmetric_categorical_group,
    trivial_monoidal,
    upper_triangular_algebra,
)
from qcat.opfib import (
    OpfibTotal,
    alpha_jn,
    check_algebra_section,
    check_fiber_powers,
    check_opfibration,
    delta_compose,
    fin_compose,
    iota,
    is_convex,
    monotone_maps,
)
from qcat.symmetric import (
    FOLD,
    TWIST,
    DualPairWitness,
    build_opfib_fin,
    check_commutative_algebra_section,
    check_dual_pair,
    collapsing_convex_check,
    commutative_section_from_monoid,
    compare_with_delta,
    duals_canonical_iso,
    extract_symmetric,
    find_right_dual,
    forget_commutative,
    is_collapsing,
    phi,
    phi_functoriality_check,
    swap_dual,
    triangle_composites,
    underlying_monoidal,
)


def test_collapsing_examples():
    assert not is_collapsing(FOLD)  # two points over 1
    assert is_collapsing(TWIST)
    assert is_collapsing(alpha_jn(1, 2))


def test_phi_of_small_maps():
    assert phi(iota(1, 2)) == alpha_jn(1, 2)
    assert phi(iota(2, 2)) == alpha_jn(2, 2)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 4), st.integers(0, 4), st.data())
def test_collapsing_iff_convex(k, n, data):
    a = data.draw(st.sampled_from(monotone_maps(k, n)))
    image = set(a.values)
    convex = len(image) == k + 1 and (not image or image == set(range(min(image), max(image) + 1)))
    assert is_collapsing(phi(a)) == convex == is_convex(a)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.data())
def test_phi_is_contravariant(m, k, n, data):
    a = data.draw(st.sampled_from(monotone_maps(k, n)))
    b = data.draw(st.sampled_from(monotone_maps(m, k)))
    assert phi(delta_compose(a, b)) == fin_compose(phi(b), phi(a))


def test_exhaustive_reports():
    assert collapsing_convex_check(3).ok
    assert phi_functoriality_check(2).ok


def test_fin_encoding_needs_braiding():
    with pytest.raises(PreconditionError):
        OpfibTotal(categorical_group(), 2, "fin")


@pytest.mark.parametrize(
    "M",
    [trivial_monoidal(), discrete_group_monoidal(2), symmetric_categorical_group(), max_poset_monoidal()],
    ids=lambda M: M.name,
)
def test_symmetric_extraction_round_trip(M):
    p = build_opfib_fin(M, 3)
    assert check_fiber_powers(p)
    e = extract_symmetric(p, M)
    assert e.isomorphic, e.mismatches


def test_fin_total_is_opfibration():
    p = build_opfib_fin(symmetric_categorical_group(), 2)
    assert check_opfibration(p)


def test_pullback_agrees_with_delta_encoding():
    p = build_opfib_fin(symmetric_categorical_group(), 2)
    assert compare_with_delta(underlying_monoidal(p))


def test_commutative_sections_and_forgetting():
    M = max_poset_monoidal()
    p = build_opfib_fin(M, 2)
    for A, mu, eta in [("0", "id_0", "id_0"), ("1", "id_1", "0<1")]:
        S = commutative_section_from_monoid(p, A, mu, eta)
        assert check_commutative_algebra_section(S)
        assert check_algebra_section(forget_commutative(S))


def test_noncommutative_algebra_is_rejected():
    M = matrix_category(2, 3)
    A, mu, eta = upper_triangular_algebra()
    p = OpfibTotal(M, 2, "fin", objects=[A], require_closed=False)
    with pytest.raises(PreconditionError):
        commutative_section_from_monoid(p, A, mu, eta)
    S = commutative_section_from_monoid(p, A, mu, eta, check=False)
    v = check_commutative_algebra_section(S)
    assert not v and v.detail == "not functorial"


def test_matrix_duals():
    M = matrix_category(2, 2)
    counts = {X: len(find_right_dual(M, X)) for X in M.category.objects}
    assert counts == {0: 1, 1: 1, 2: 6}
    for X in M.category.objects:
        for w in find_right_dual(M, X):
            t1, t2 = triangle_composites(M, w)
            assert t1 == M.id(X) and t2 == M.id(w.Y)


def test_two_duals_of_a_plane_are_canonically_isomorphic():
    M = matrix_category(2, 2)
    ws = find_right_dual(M, 2)
    for w in ws[1:]:
        iso = duals_canonical_iso(M, ws[0], w)
        assert iso.verified


def test_swapped_dual_pair():
    M = matrix_category(2, 2)
    for w in find_right_dual(M, 2):
        assert check_dual_pair(M, swap_dual(M, w))


def test_wrong_counit_fails_triangle():
    M = matrix_category(2, 2)
    w = find_right_dual(M, 1)[0]
    zero = (1, 1, ((0,),))
    assert not check_dual_pair(M, DualPairWitness(1, 1, w.eta, zero))


def test_dual_search_respects_budget():
    M = matrix_category(2, 3)
    with pytest.raises(BudgetExceeded):
        find_right_dual(M, 3, objects=[3], budget=Budget(max_level_size=100))


def test_commutative_monoids_in_matrices():
    M = matrix_category(2, 2)
    assert is_commutative_monoid(M, 1, (1, 1, ((1,),)), (1, 1, ((1,),))) == []
