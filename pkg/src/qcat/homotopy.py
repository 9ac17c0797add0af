"""Homotopy relation on edges, the homotopy category, equivalences, right mapping spaces."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct

from ._common import Budget, PreconditionError, Verdict
from .category import FiniteCategory
from .lifting import HornInstance, check_quasicategory, iter_compatible_tuples
from .sset import FiniteSimplicialSet, SimplexRef, from_keys


@dataclass(frozen=True)
class HomotopyWitness:
    """A 2-simplex ``sigma`` with boundary ``(to, from, id_x)``."""

    sigma: SimplexRef
    source: SimplexRef  # "from"
    target: SimplexRef  # "to"


def _edge(X: FiniteSimplicialSet, f) -> int:
    return X.index(1, f) if isinstance(f, str) else f


def _ends(X, e):
    d0, d1 = X.faces[1][e]
    return d1, d0  # (source vertex, target vertex)


def identity_edge(X: FiniteSimplicialSet, v: int) -> int:
    return X.degens[0][v][0]


def constant_homotopy(X: FiniteSimplicialSet, f) -> HomotopyWitness:
    """``kappa_f = s_0 f``, exhibiting ``f ~ f``."""
    e = _edge(X, f)
    sigma = X.degens[1][e][0]
    return HomotopyWitness(X.ref(2, sigma), X.ref(1, e), X.ref(1, e))


def _witness_index(X, f: int, g: int) -> int | None:
    x = _ends(X, f)[0]
    hits = X.face_lookup(2).get((g, f, identity_edge(X, x)), ())
    return hits[0] if hits else None


def are_homotopic(X: FiniteSimplicialSet, f, g, require_parallel: bool = True) -> HomotopyWitness | None:
    """A 2-simplex with ``d_0 = g``, ``d_1 = f``, ``d_2 = id``, if one exists in ``X_2``."""
    f, g = _edge(X, f), _edge(X, g)
    if _ends(X, f) != _ends(X, g):
        if require_parallel:
            raise ValueError("edges are not parallel")
        return None
    s = _witness_index(X, f, g)
    if s is None:
        return None
    return HomotopyWitness(X.ref(2, s), X.ref(1, f), X.ref(1, g))


@dataclass
class HomotopyPartition:
    classes: list  # lists of edge ids
    closure_needed: bool


def edges_between(X: FiniteSimplicialSet, x: int, y: int) -> list[int]:
    return [e for e in range(X.size(1)) if _ends(X, e) == (x, y)]


def homotopy_classes(X: FiniteSimplicialSet, x, y) -> HomotopyPartition:
    """Partition of the edges ``x -> y`` generated by the witness relation.

    ``closure_needed`` reports whether the raw relation failed to be an
    equivalence relation (it must not, on a quasi-category).
    """
    x = X.index(0, x) if isinstance(x, str) else x
    y = X.index(0, y) if isinstance(y, str) else y
    edges = edges_between(X, x, y)
    rel = {(f, g) for f in edges for g in edges if _witness_index(X, f, g) is not None}
    reflexive = all((f, f) in rel for f in edges)
    symmetric = all((g, f) in rel for f, g in rel)
    transitive = all((f, h) in rel for f, g in rel for g2, h in rel if g == g2)
    parent = {e: e for e in edges}

    def find(e):
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for f, g in rel:
        rf, rg = find(f), find(g)
        if rf != rg:
            parent[max(rf, rg)] = min(rf, rg)
    groups: dict[int, list[int]] = {}
    for e in edges:
        groups.setdefault(find(e), []).append(e)
    classes = [[X.ids[1][e] for e in grp] for _, grp in sorted(groups.items())]
    return HomotopyPartition(classes, not (reflexive and symmetric and transitive))


@dataclass
class HoCategory:
    category: FiniteCategory
    class_map: dict  # edge id -> morphism name of its class
    certified: dict = field(default_factory=dict)


def homotopy_category(X: FiniteSimplicialSet, dmax: int = 3, verify_all_fillers: bool = True, budget: Budget | None = None) -> HoCategory:
    """``Ho(X)`` for a quasi-category ``X`` (checked up to ``dmax >= 3``).

    Composition fills ``(g, ., f)`` and takes ``d_1`` of the first filler.
    With ``verify_all_fillers`` every representative pair and every filler is
    re-checked to land in the same class.  Raises ``PreconditionError`` if
    ``X`` is not a quasi-category at the checked dimension or if
    composition is not well defined (truncation too low).
    """
    if dmax < 3 or X.dim < 3:
        raise PreconditionError("homotopy category needs truncation >= 3")
    v = check_quasicategory(X, min(dmax, X.dim), budget)
    if not v:
        raise PreconditionError(f"not a quasi-category: {v.render(X)}")

    rep: dict[int, int] = {}
    for x in range(X.size(0)):
        for y in range(X.size(0)):
            for cls in homotopy_classes(X, x, y).classes:
                r = X.index(1, cls[0])
                for e in cls:
                    rep[X.index(1, e)] = r
    class_name = {r: f"[{X.ids[1][r]}]" for r in set(rep.values())}

    table = X.horn_lookup(2, 1)
    members: dict[int, list[int]] = {}
    for e, r in rep.items():
        members.setdefault(r, []).append(e)
    reps = sorted(members)
    compose = {}
    for rf in reps:
        for rg in reps:
            if _ends(X, rf)[1] != _ends(X, rg)[0]:
                continue
            fillers = table.get((rg, rf), ())
            if not fillers:
                raise PreconditionError("fillerless inner horn")
            h = rep[X.faces[2][fillers[0]][1]]
            if verify_all_fillers:
                for f, g in iproduct(members[rf], members[rg]):
                    for s in table.get((g, f), ()):
                        if rep[X.faces[2][s][1]] != h:
                            raise PreconditionError(
                                f"composition of [{X.ids[1][rg]}] o [{X.ids[1][rf]}] not well defined"
                            )
            compose[(class_name[rg], class_name[rf])] = class_name[h]
    objects = list(X.ids[0])
    morphisms = {class_name[r]: (X.ids[0][_ends(X, r)[0]], X.ids[0][_ends(X, r)[1]]) for r in reps}
    identities = {X.ids[0][x]: class_name[rep[identity_edge(X, x)]] for x in range(X.size(0))}
    C = FiniteCategory(objects, morphisms, compose, identities, name=f"Ho({X.name})")
    report = C.validate()
    if not report.ok:
        raise PreconditionError(f"Ho is not a category at this truncation: {report.failures[:3]}")
    return HoCategory(
        C,
        {X.ids[1][e]: class_name[r] for e, r in sorted(rep.items())},
        {"associative": True, "unital": True, "representative_independent": verify_all_fillers},
    )


def is_equivalence(X: FiniteSimplicialSet, f, dmax: int = 3, ho: HoCategory | None = None) -> Verdict:
    """``[f]`` invertible in ``Ho(X)``; the witness is the inverse class."""
    ho = ho or homotopy_category(X, dmax)
    e = _edge(X, f)
    cls = ho.class_map[X.ids[1][e]]
    inv = ho.category.inverse(cls)
    return Verdict(inv is not None, inv, "", dmax)


def _leading_edge(X: FiniteSimplicialSet, n: int, faces: tuple) -> int:
    # the edge {0,1} of a horn Lambda^n_0: it lies in d_n (n >= 2)
    top = faces[n]
    return X.restrict(n - 1, top, (0, 1))


def equivalence_via_outer_horns(X: FiniteSimplicialSet, f, dmax: int, budget: Budget | None = None) -> Verdict:
    """Every ``Lambda^n_0`` horn (2 <= n <= dmax) with leading edge ``f`` fills."""
    if dmax > X.dim:
        raise ValueError(f"dmax={dmax} above truncation {X.dim}")
    e = _edge(X, f)
    for n in range(2, dmax + 1):
        table = X.horn_lookup(n, 0)
        allowed = None
        if n == 2:
            allowed = [None, None, [e]]
        for t in iter_compatible_tuples(X, n, 0, allowed, budget):
            if _leading_edge(X, n, t) != e:
                continue
            if not table.get(t[1:], ()):
                return Verdict(False, HornInstance(n, 0, t), "unfillable left-outer horn", dmax)
    return Verdict(True, None, "", dmax)


def is_infinity_groupoid(X: FiniteSimplicialSet, dmax: int = 3) -> bool:
    ho = homotopy_category(X, dmax)
    C = ho.category
    return all(C.is_iso(m) for m in C.morphisms)


def right_mapping_space(X: FiniteSimplicialSet, x, y, d: int) -> FiniteSimplicialSet:
    """``Hom^R_X(x, y)``: n-simplices are ``(n+1)``-simplices ``tau`` of ``X`` whose
    front n-face is the totally degenerate simplex on ``x`` and whose last
    vertex is ``y``.  Faces and degeneracies are the ones of ``X`` with index
    at most ``n``.
    """
    if d + 1 > X.dim:
        raise ValueError(f"need truncation >= {d + 1}")
    x = X.index(0, x) if isinstance(x, str) else x
    y = X.index(0, y) if isinstance(y, str) else y
    const = [x]
    for n in range(1, d + 1):
        const.append(X.degens[n - 1][const[-1]][0])
    levels = []
    for n in range(d + 1):
        keep = []
        for t in range(X.size(n + 1)):
            if X.faces[n + 1][t][n + 1] != const[n]:
                continue
            if X.restrict(n + 1, t, (n + 1,)) != y:
                continue
            keep.append(t)
        levels.append(keep)
    return from_keys(
        d,
        levels,
        lambda n, t, i: X.faces[n + 1][t][i],
        lambda n, t, j: X.degens[n + 1][t][j],
        lambda n, t: X.ids[n + 1][t],
        name=f"Hom^R({X.ids[0][x]},{X.ids[0][y]})",
    )
