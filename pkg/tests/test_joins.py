
import pytest

from qcat._common import PreconditionError
from qcat.category import nerve, ordinal, poset_category
from qcat.joins import (
    colimit_candidates,
    coslice_under,
    empty_diagram,
    final_vertices,
    initial_vertices,
    is_final,
    join,
    join_index,
    join_level_count,
    join_simplex,
    join_standard_iso,
    left_cone,
    limit_candidates,
    right_cone,
    slice_over,
    vertex_diagram,
)
from qcat.sset import (
    SimplicialMap,
    empty,
    find_isomorphism,
    horn,
    is_isomorphism,
    point,
    product,
    standard_simplex,
    validate,
)


def test_join_with_empty_is_identity():
    D = standard_simplex(1, 3)
    J = join(D, empty(3), 3)
    assert J.sizes() == D.sizes()
    assert find_isomorphism(J, D) is not None


def test_join_level_counts():
    for i in range(3):
        for j in range(3):
            A, B = standard_simplex(i, 3), standard_simplex(j, 3)
            J = join(A, B, 3)
            assert validate(J).ok
            for n in range(4):
                assert J.size(n) == join_level_count(A, B, n)


def test_join_simplex_codes_roundtrip():
    J = join(standard_simplex(0, 2), standard_simplex(0, 2), 2)
    for n in range(3):
        for s in range(J.size(n)):
            assert join_index(J, n, join_simplex(J, n, s)) == s


def test_standard_iso_is_an_isomorphism():
    f = join_standard_iso(1, 1, 3)
    assert is_isomorphism(f)


def test_cones_of_horns_are_squares():
    sq = product(standard_simplex(1, 3), standard_simplex(1, 3))
    assert find_isomorphism(right_cone(horn(2, 0, 3), 3), sq) is not None
    assert find_isomorphism(left_cone(horn(2, 2, 3), 3), sq) is not None
    # the other cone of each horn is not a square
    assert find_isomorphism(left_cone(horn(2, 0, 3), 3), sq) is None


def test_cone_on_point_is_interval():
    assert find_isomorphism(right_cone(point(2), 2), standard_simplex(1, 2)) is not None


def _wedge(N):
    P = poset_category(["a", "b", "c"], [("a", "c"), ("b", "c")], name="wedge")
    return nerve(P, N)


def test_final_and_initial_vertices():
    X = _wedge(4)
    assert final_vertices(X, 3) == ["c"]
    assert initial_vertices(X, 3) == []
    Y = nerve(ordinal(2), 4)
    assert initial_vertices(Y, 3) == ["0"]


def test_slice_over_vertex_is_downset():
    X = nerve(ordinal(2), 3)
    S = slice_over(X, vertex_diagram(X, "1"), 1)
    # objects over 1 are the arrows into 1
    assert S.space.size(0) == 2
    assert validate(S.space).ok


def test_slice_needs_truncation():
    X = nerve(ordinal(2), 2)
    with pytest.raises(PreconditionError):
        is_final(X, "2", 2)


def test_coslice_under_vertex():
    X = nerve(ordinal(2), 3)
    S = coslice_under(X, vertex_diagram(X, "1"), 1)
    assert S.space.size(0) == 2


def test_limits_of_discrete_diagram():
    P = poset_category(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")], name="square")
    X = nerve(P, 5)
    # the diagram picking a and b out of a two-point discrete set
    from qcat.sset import disjoint_union

    two = disjoint_union(point(0, "x"), point(0, "y"))
    p = SimplicialMap(two, X, ((X.index(0, "a"), X.index(0, "b")),))
    assert limit_candidates(X, p, 2).apexes == ["0"]
    assert colimit_candidates(X, p, 2).apexes == ["1"]


def test_empty_limit_is_final_object():
    X = nerve(ordinal(2), 4)
    assert limit_candidates(X, empty_diagram(X), 3).apexes == final_vertices(X, 3) == ["2"]
