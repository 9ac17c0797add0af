import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qcat.monoidal import (
    all_words,
    canonical_map,
    categorical_group,
    check_rewrite_paths,
    coherence_iso,
    cubic_cocycle,
    discrete_group_monoidal,
    evaluate,
    forget_braiding,
    is_commutative_monoid,
    is_monoid,
    left_normal,
    mat,
    mat_identity,
    mat_inverse,
    mat_kron,
    mat_mul,
    matrix_category,
    max_poset_monoidal,
    parse_word,
    permutation_iso,
    render_matrix,
    render_word,
    shuffle_matrix,
    symmetric_categorical_group,
    trivial_monoidal,
    unit_monoid,
    upper_triangular_algebra,
    validate_monoidal,
    validate_symmetric,
    with_associator,
)

CORPUS = [
    trivial_monoidal(),
    discrete_group_monoidal(2),
    discrete_group_monoidal(3),
    categorical_group(),
    categorical_group(cubic_cocycle()),
    max_poset_monoidal(),
]


def _np(f):
    m, n, rows = f
    return np.array(rows, dtype=int).reshape(n, m)


matrices = st.integers(0, 3).flatmap(
    lambda m: st.integers(0, 3).flatmap(
        lambda n: st.lists(st.lists(st.integers(0, 1), min_size=m, max_size=m), min_size=n, max_size=n).map(
            lambda rows: (m, n, tuple(tuple(r) for r in rows))
        )
    )
)


@settings(max_examples=60, deadline=None)
@given(matrices, st.data())
def test_matrix_product_matches_numpy(f, data):
    m, n, _ = f
    k = data.draw(st.integers(0, 3))
    rows = data.draw(st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n), min_size=k, max_size=k))
    g = (n, k, tuple(tuple(r) for r in rows))
    h = mat_mul(g, f)
    assert np.array_equal(_np(h), (_np(g) @ _np(f)) % 2)


@settings(max_examples=60, deadline=None)
@given(matrices, matrices)
def test_kron_matches_numpy(f, g):
    assert np.array_equal(_np(mat_kron(f, g)), np.kron(_np(f), _np(g)))


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3), st.data())
def test_inverse_over_f2(n, data):
    rows = data.draw(st.lists(st.lists(st.integers(0, 1), min_size=n, max_size=n), min_size=n, max_size=n))
    f = mat(rows, n)
    det = round(np.linalg.det(np.array(rows, dtype=float))) % 2
    inv = mat_inverse(f)
    assert (inv is not None) == (det == 1)
    if inv is not None:
        assert mat_mul(inv, f) == mat_identity(n)


def test_shuffle_is_involution():
    for a in range(4):
        for b in range(4):
            assert mat_mul(shuffle_matrix(b, a), shuffle_matrix(a, b)) == mat_identity(a * b)


def test_render_matrix():
    assert render_matrix(mat([[1, 0], [1, 1]])) == "2->2:10/11"
    assert render_matrix(mat_identity(0)) == "0->0:-"


@pytest.mark.parametrize("M", CORPUS, ids=lambda M: M.name)
def test_corpus_is_monoidal(M):
    rep = validate_monoidal(M)
    assert rep.ok, rep.lines()


def test_symmetric_corpus():
    for M in [trivial_monoidal(), discrete_group_monoidal(2), symmetric_categorical_group(), max_poset_monoidal()]:
        assert validate_symmetric(M).ok, M.name
    assert validate_symmetric(matrix_category(2, 2), [0, 1]).ok


def test_matrix_category_is_monoidal_on_small_objects():
    M = matrix_category(2, 2)
    assert validate_monoidal(M, [0, 1]).ok
    with pytest.raises(ValueError):
        matrix_category(2, 4)


def test_pentagon_corruption_gives_quadruple():
    M = with_associator(categorical_group(), "1", "1", "0", "-0")
    rep = validate_monoidal(M)
    kinds = {k for k, _, _ in rep.failures}
    assert "pentagon" in kinds
    w = next(w for k, w, _ in rep.failures if k == "pentagon")
    assert len(w) == 4


def test_corrupted_unitor_is_reported():
    M = max_poset_monoidal()
    left = dict(M.left_unitor)
    left["1"] = "0<1"
    bad = type(M)(
        M.category, M.tensor_obj, M.tensor_mor, M.unit, M.associator, left, M.right_unitor, braiding=M.braiding
    )
    assert not validate_monoidal(bad).ok


def test_words_parse_and_render():
    W = parse_word("(A*I)*B")
    assert render_word(W) == "((A*I)*B)"
    with pytest.raises(ValueError):
        parse_word("(A*B")
    assert left_normal([]) == parse_word("I")


def test_rewrite_paths_agree():
    M = categorical_group(cubic_cocycle())
    for W in all_words(["1", "1", "0", "1"]):
        assert check_rewrite_paths(M, W).ok
    for W in all_words(["1", "0"], with_units=1):
        assert check_rewrite_paths(M, W).ok


def test_rewrite_paths_disagree_on_corruption():
    M = with_associator(categorical_group(), "1", "1", "0", "-0")
    assert not all(check_rewrite_paths(M, W).ok for W in all_words(["1", "1", "0", "0"]))


def test_coherence_iso_round_trip():
    M = categorical_group(cubic_cocycle())
    a, b = parse_word("(1*1)*1"), parse_word("1*(1*1)")
    f, g = coherence_iso(M, a, b), coherence_iso(M, b, a)
    assert M.compose(g, f) == M.id(evaluate(M, a))
    assert canonical_map(M, parse_word("1")) == M.id("1")


def test_permutation_strategies_agree():
    M = matrix_category(2, 2)
    objs = [1, 2, 1]
    for order in [(2, 1, 0), (1, 0, 2), (0, 2, 1)]:
        assert permutation_iso(M, objs, order, "bubble") == permutation_iso(M, objs, order, "insertion")


def test_monoids():
    M = categorical_group()
    assert is_monoid(M, *unit_monoid(M)) == []
    assert is_monoid(M, "0", "-0", "-0") == []
    assert is_monoid(M, "1", "+0", "+0") != []
    A, mu, eta = upper_triangular_algebra()
    Mat = matrix_category(2, 3)
    assert is_monoid(Mat, A, mu, eta) == []
    assert any("commutativity" in s for s in is_commutative_monoid(Mat, A, mu, eta))


def test_forget_braiding():
    M = forget_braiding(symmetric_categorical_group())
    assert not M.symmetric
    assert validate_monoidal(M).ok
