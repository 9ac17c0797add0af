"""Acceptance criteria 1-13.

Each test prints one ``PASS``/``FAIL`` line and then asserts.  Time limits
are part of each criterion.  Values that can be recomputed independently
(binomial counts, poset tops, F_2 algebra isomorphisms) are checked against
oracles written here rather than against library helpers.
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from itertools import combinations
from math import comb

import pytest

from qcat.category import (
    cyclic_group,
    find_category_isomorphism,
    nerve,
    ordinal,
    parallel_pair,
    poset_category,
    walking_idempotent,
    with_composite,
)
from qcat.enriched import (
    codiscrete_monoid_category,
    coherent_nerve,
    discrete_simplicial_category,
    group_nerve_category,
    is_locally_kan,
    thickened_simplex,
)
from qcat.homotopy import are_homotopic, homotopy_category, homotopy_classes, is_infinity_groupoid
from qcat.joins import (
    empty_diagram,
    final_vertices,
    join,
    join_standard_iso,
    left_cone,
    limit_candidates,
    right_cone,
)
from qcat.lifting import (
    check_kan,
    check_quasicategory,
    check_unique_inner_fillers,
    enumerate_horns,
    find_fillers,
    has_rlp,
)
from qcat.monoidal import (
    categorical_group,
    cubic_cocycle,
    discrete_group_monoidal,
    is_commutative_monoid,
    is_monoid,
    matrix_category,
    max_poset_monoidal,
    symmetric_categorical_group,
    trivial_monoidal,
    validate_monoidal,
    with_associator,
)
from qcat.opfib import (
    alpha_jn,
    build_opfib_delta,
    check_algebra_section,
    check_associativity,
    delta_compose,
    extract_tensor,
    fin_compose,
    iota,
    is_initial_algebra,
    monoid_from_section,
    monotone_maps,
    section_from_monoid,
)
from qcat.sset import (
    codiscrete,
    find_isomorphism,
    horn,
    horn_inclusion,
    is_isomorphism,
    mapping_space,
    product,
    restriction_map,
    standard_simplex,
    validate,
)
from qcat.symmetric import (
    build_opfib_fin,
    check_commutative_algebra_section,
    check_dual_pair,
    collapsing_convex_check,
    commutative_section_from_monoid,
    duals_canonical_iso,
    find_right_dual,
    forget_commutative,
    is_collapsing,
    phi,
    phi_functoriality_check,
    triangle_composites,
)


class Criterion:
    def __init__(self, number: int, title: str, seconds: float):
        self.number, self.title, self.seconds = number, title, seconds
        self.failures: list[str] = []

    def expect(self, ok, message: str) -> None:
        if not ok:
            self.failures.append(message)


@pytest.fixture
def criterion(capsys):
    @contextmanager
    def run(number: int, title: str, seconds: float):
        c = Criterion(number, title, seconds)
        start = time.perf_counter()
        yield c
        elapsed = time.perf_counter() - start
        c.expect(elapsed < seconds, f"took {elapsed:.1f}s, limit {seconds:g}s")
        status = "PASS" if not c.failures else "FAIL"
        line = f"{status} criterion {number:2d}: {title} [{elapsed:.2f}s]"
        if c.failures:
            line += " :: " + "; ".join(c.failures)
        with capsys.disabled():
            print("\n" + line)
        assert not c.failures, line

    return run


def _corpus():
    diamond = poset_category(["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")], name="diamond")
    return [ordinal(1), ordinal(2), diamond, cyclic_group(2), cyclic_group(3), walking_idempotent(), parallel_pair()]


# ---------------------------------------------------------------------------


def test_criterion_01_thickened_two_simplex(criterion):
    with criterion(1, "hom spaces of C[Delta^2]", 1) as c:
        T = thickened_simplex(2, 2)
        H02, H00, H01 = T.hom(0, 2), T.hom(0, 0), T.hom(0, 1)
        nd = lambda H, n: sorted(H.ids[n][x] for x in H.nondegenerate(n))
        c.expect(nd(H02, 0) == ["012", "02"], f"Map(0,2)_0 nondegenerate {nd(H02, 0)}")
        c.expect(nd(H02, 1) == ["02<012"], f"Map(0,2)_1 nondegenerate {nd(H02, 1)}")
        c.expect(nd(H02, 2) == [], "Map(0,2) has a nondegenerate 2-simplex")
        c.expect(H00.size(0) == 1 and nd(H00, 1) == [], "Map(0,0) is not a point")
        c.expect(H01.size(0) == 1 and nd(H01, 1) == [], "Map(0,1) is not a point")


def test_criterion_02_join_oracle(criterion):
    N = 4
    with criterion(2, "Delta^i * Delta^j = Delta^(i+1+j), i+j+1 <= 4", 5) as c:
        for i in range(4):
            for j in range(4 - i):
                J = join(standard_simplex(i, N), standard_simplex(j, N), N)
                c.expect(validate(J).ok, f"join {i},{j} not simplicial")
                f = join_standard_iso(i, j, N)
                c.expect(is_isomorphism(f), f"explicit map {i},{j} is not an isomorphism")
                for n in range(N + 1):
                    mixed = sum(comb(i + a + 1, a + 1) * comb(j + n - a, n - a) for a in range(n))
                    formula = comb(i + n + 1, n + 1) + comb(j + n + 1, n + 1) + mixed
                    standard = comb(i + j + 1 + n + 1, n + 1)
                    c.expect(J.size(n) == formula == standard, f"level {n} of {i}*{j}: {J.size(n)}, {formula}, {standard}")


def test_criterion_03_cone_identities(criterion):
    N = 3
    with criterion(3, "cones on outer 2-horns are squares", 1) as c:
        square = product(standard_simplex(1, N), standard_simplex(1, N))
        for label, X in [("right cone of Lambda^2_0", right_cone(horn(2, 0, N), N)), ("left cone of Lambda^2_2", left_cone(horn(2, 2, N), N))]:
            f = find_isomorphism(X, square)
            c.expect(f is not None and is_isomorphism(f), f"{label} is not isomorphic to the square")


def test_criterion_04_nerve_characterization(criterion):
    with criterion(4, "nerves have unique inner fillers; corruption is caught", 10) as c:
        corpus = _corpus()
        c.expect(len(corpus) >= 5, "corpus too small")
        for C in corpus:
            v = check_unique_inner_fillers(nerve(C, 3), 3)
            c.expect(v.kind == "nerve_like", f"{C.name}: {v.kind}")
        for C, (g, f, h) in [(cyclic_group(3), ("g1", "g1", "g0")), (cyclic_group(4), ("g2", "g1", "g0"))]:
            X = nerve(with_composite(C, g, f, h), 3)
            c.expect(validate(X).ok, f"corrupted {C.name} nerve is not simplicial")
            v = check_unique_inner_fillers(X, 3)
            w = v.failure_witness
            c.expect(not v and w is not None, f"corruption of {C.name} not detected")
            c.expect(w is None or (w.dim, w.missing_face) == (3, 1), f"{C.name}: witness {w}, expected Lambda^3_1")


def test_criterion_05_kan_iff_groupoid(criterion):
    with criterion(5, "Kan complex iff infinity-groupoid", 10) as c:
        X = nerve(cyclic_group(2), 3)
        c.expect(check_kan(X, 3).kind == "kan", "N(C2) is not Kan")
        c.expect(is_infinity_groupoid(X), "N(C2) is not an infinity-groupoid")
        Y = nerve(ordinal(1), 3)
        v = check_kan(Y, 3)
        w = v.failure_witness
        c.expect(not v and w is not None and (w.dim, w.missing_face) == (2, 0), f"N([1]) Kan witness {w}")
        c.expect(not is_infinity_groupoid(Y), "N([1]) is an infinity-groupoid")
        for C in _corpus():
            Z = nerve(C, 3)
            groupoid = all(C.is_iso(m) for m in C.morphisms)
            c.expect(bool(check_kan(Z, 3)) == is_infinity_groupoid(Z) == groupoid, f"disagreement on {C.name}")


def test_criterion_06_homotopy_machinery(criterion):
    with criterion(6, "homotopy relation, filler independence, Ho(N(C)) = C", 20) as c:
        nerves = [(C, nerve(C, 3)) for C in _corpus()]
        others = [
            (None, codiscrete(["a", "b"], 3)),
            (None, coherent_nerve(group_nerve_category(cyclic_group(2), 2), 3)),
        ]
        for C, X in nerves + others:
            label = X.name
            c.expect(check_quasicategory(X, 3), f"{label} is not a quasi-category")
            for x in range(X.size(0)):
                for y in range(X.size(0)):
                    if homotopy_classes(X, x, y).closure_needed:
                        c.expect(False, f"{label}: relation on {x}->{y} needs closure")
            for h in enumerate_horns(X, 2, 1):
                d1 = [X.faces[2][s][1] for s in find_fillers(X, h)]
                for a, b in combinations(d1, 2):
                    c.expect(are_homotopic(X, a, b) is not None, f"{label}: fillers of {h.render(X)} disagree")
            if C is not None:
                ho = homotopy_category(X, 3)
                c.expect(find_category_isomorphism(C, ho.category) is not None, f"Ho(N({C.name})) differs")


def test_criterion_07_final_objects(criterion):
    posets = [
        ("[2]", ["0", "1", "2"], [("0", "1"), ("1", "2")]),
        ("wedge", ["a", "b", "c"], [("a", "c"), ("b", "c")]),
        ("diamond", ["0", "a", "b", "1"], [("0", "a"), ("0", "b"), ("a", "1"), ("b", "1")]),
        ("point", ["p"], []),
    ]
    with criterion(7, "final objects and limits of the empty diagram", 10) as c:
        for name, elems, rel in posets:
            P = poset_category(elems, rel, name=name)
            tops = [t for t in elems if all(P.hom(x, t) for x in elems)]
            X = nerve(P, 4)
            finals = final_vertices(X, 3)
            c.expect(finals == tops, f"{name}: final {finals}, top {tops}")
            apexes = limit_candidates(X, empty_diagram(X), 3).apexes
            c.expect(sorted(apexes) == sorted(finals), f"{name}: empty limits {apexes}")


def test_criterion_08_restriction_map(criterion):
    with criterion(8, "Map(Delta^2, N[2]) -> Map(Lambda^2_1, N[2]) lifts against boundaries", 10) as c:
        X = nerve(ordinal(2), 2)
        big = mapping_space(standard_simplex(2, 2), X, 1)
        small = mapping_space(horn(2, 1, 2), X, 1)
        r = restriction_map(horn_inclusion(2, 1, 2), big, small)
        c.expect(validate(big.space).ok and validate(small.space).ok, "mapping spaces not simplicial")
        v = has_rlp(r, "boundaries", 1)
        c.expect(v.holds, f"no lift: {v.witness}")


def test_criterion_09_monoidal_round_trip(criterion):
    with criterion(9, "extraction round trip, pentagon witness, associativity of M^(x)", 20) as c:
        presentations = [
            trivial_monoidal(),
            discrete_group_monoidal(2),
            categorical_group(),
            categorical_group(cubic_cocycle()),
            max_poset_monoidal(),
        ]
        for M in presentations:
            e = extract_tensor(build_opfib_delta(M, 3), M)
            c.expect(e.isomorphic, f"{M.name}: {e.mismatches[:2]}")
        bad = with_associator(categorical_group(), "1", "1", "0", "-0")
        rep = validate_monoidal(bad)
        quads = [w for kind, w, _ in rep.failures if kind == "pentagon" and len(w) == 4]
        c.expect(quads, "pentagon corruption not detected with a quadruple")
        for M in [trivial_monoidal(), discrete_group_monoidal(2)]:
            v = check_associativity(build_opfib_delta(M, 3))
            c.expect(v.holds, f"{M.name}: not associative at {v.witness}")


def _monoids(M, commutative=False, objects=None):
    C = M.category
    test = is_commutative_monoid if commutative else is_monoid
    return [
        (A, mu, eta)
        for A in (objects if objects is not None else C.objects)
        for mu in C.hom(M.tensor(A, A), A)
        for eta in C.hom(M.unit, A)
        if not test(M, A, mu, eta)
    ]


def _unit_isomorphic(M, A, mu, eta) -> bool:
    # an algebra isomorphism from (I, lambda_I, id_I)
    C = M.category
    for f in C.hom(M.unit, A):
        if C.inverse(f) is None:
            continue
        if f != eta:
            continue
        if M.compose(f, M.lam(M.unit)) == M.compose(mu, M.tensor_m(f, f)):
            return True
    return False


def test_criterion_10_algebra_sections(criterion):
    with criterion(10, "monoids and algebra sections", 10) as c:
        seen_initial = seen_other = False
        for M in [trivial_monoidal(), discrete_group_monoidal(2), categorical_group(), categorical_group(cubic_cocycle()), max_poset_monoidal()]:
            p = build_opfib_delta(M, 3)
            for A, mu, eta in _monoids(M):
                S = section_from_monoid(p, A, mu, eta)
                r = monoid_from_section(S)
                c.expect(r.ok and (r.A, r.mu, r.eta) == (A, mu, eta), f"{M.name}: monoid round trip at {A}")
                S2 = section_from_monoid(p, r.A, r.mu, r.eta)
                c.expect(S2.on_morphisms == S.on_morphisms, f"{M.name}: section round trip at {A}")
                v = check_algebra_section(S)
                c.expect(v.holds, f"{M.name}: section at {A} fails: {v.detail}")
                initial = _unit_isomorphic(M, A, mu, eta)
                seen_initial |= initial
                seen_other |= not initial
                c.expect(is_initial_algebra(S) == initial, f"{M.name}: initiality of ({A}, {mu}, {eta})")
        c.expect(seen_initial and seen_other, "corpus lacks initial or non-initial algebras")


def test_criterion_11_collapsing_convex(criterion):
    with criterion(11, "collapsing iff convex, phi functorial, phi(iota) = alpha", 5) as c:
        count = 0
        for n in range(5):
            for k in range(5):
                for a in monotone_maps(k, n):
                    count += 1
                    img = list(a.values)
                    convex = len(set(img)) == len(img) and img == list(range(img[0], img[0] + len(img)))
                    fa = phi(a)
                    fibres = [sum(1 for j in range(1, n + 1) if fa.values[j] == i) for i in range(1, k + 1)]
                    c.expect(is_collapsing(fa) == all(x == 1 for x in fibres) == convex, f"mismatch at {a}")
        c.expect(count == sum(comb(n + k + 1, k + 1) for n in range(5) for k in range(5)), "enumeration incomplete")
        c.expect(collapsing_convex_check(4).ok, "exhaustive report fails")
        c.expect(phi_functoriality_check(3).ok, "phi not functorial up to 3")
        for n in range(4):
            for k in range(4):
                for m in range(4):
                    for a in monotone_maps(k, n):
                        for b in monotone_maps(m, k):
                            if phi(delta_compose(a, b)) != fin_compose(phi(b), phi(a)):
                                c.expect(False, f"phi(a o b) at {a}, {b}")
        for n in range(1, 6):
            for i in range(1, n + 1):
                c.expect(phi(iota(i, n)) == alpha_jn(i, n), f"phi(iota_{i}) != alpha^({i},{n})")


def test_criterion_12_duality(criterion):
    with criterion(12, "duals in Mat(F_2) and forgetting commutativity", 30) as c:
        M = matrix_category(2, 2)
        for X in M.category.objects:
            ws = find_right_dual(M, X)
            c.expect(ws, f"object {X} has no right dual")
            for w in ws:
                t1, t2 = triangle_composites(M, w)
                c.expect(t1 == M.id(X) and t2 == M.id(w.Y), f"triangle fails for {X}")
                c.expect(check_dual_pair(M, w), f"dual pair check fails for {X}")
        ws = find_right_dual(M, 1)
        distinct = list(dict.fromkeys(ws))
        if len(distinct) < 2:
            c.expect(False, f"object 1 has {len(distinct)} dual witness(es), two distinct ones are required")
        else:
            iso = duals_canonical_iso(M, distinct[0], distinct[1])
            c.expect(iso.verified, "canonical isomorphism between duals of 1 not verified")
        symmetric = [
            (trivial_monoidal(), None),
            (discrete_group_monoidal(2), None),
            (symmetric_categorical_group(), None),
            (max_poset_monoidal(), None),
            (M, [0, 1]),
        ]
        for Msym, letters in symmetric:
            p = build_opfib_fin(Msym, 3, objects=letters)
            for A, mu, eta in _monoids(Msym, commutative=True, objects=letters):
                S = commutative_section_from_monoid(p, A, mu, eta)
                if not check_commutative_algebra_section(S):
                    c.expect(False, f"{Msym.name}: commutative section at {A} invalid")
                    continue
                v = check_algebra_section(forget_commutative(S))
                c.expect(v.holds, f"{Msym.name}: U(S) at {A} fails: {v.detail}")


def test_criterion_13_coherent_nerve(criterion):
    with criterion(13, "coherent nerves", 30) as c:
        for C in _corpus():
            Nd = coherent_nerve(discrete_simplicial_category(C, 2), 3)
            X = nerve(C, 3)
            f = find_isomorphism(Nd, X)
            c.expect(f is not None and is_isomorphism(f), f"coherent nerve of {C.name} differs from its nerve")
        examples = [
            group_nerve_category(cyclic_group(2), 2),
            group_nerve_category(cyclic_group(3), 2),
            codiscrete_monoid_category([0, 1], lambda a, b: (a + b) % 2, 0, 2),
        ]
        for S in examples:
            c.expect(is_locally_kan(S, 2), f"{S.name} is not locally Kan")
            v = check_quasicategory(coherent_nerve(S, 3), 3)
            c.expect(v.kind == "quasicategory", f"coherent nerve of {S.name} is not a quasi-category")
