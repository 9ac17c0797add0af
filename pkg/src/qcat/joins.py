"""Joins, cones, slices and coslices, final/initial objects, (co)limits."""

from __future__ import annotations

from dataclasses import dataclass

from ._common import Budget, PreconditionError, Verdict
from .lifting import has_rlp
from .sset import (
    FiniteSimplicialSet,
    SimplicialMap,
    empty,
    extend_truncation,
    from_keys,
    identity_map,
    iter_maps,
    point,
    simplex_map,
    standard_simplex,
    codegeneracy_map,
    coface_map,
)


def _at_least(X: FiniteSimplicialSet, N: int) -> FiniteSimplicialSet:
    return X if X.dim >= N else extend_truncation(X, N)


def _join_level_keys(K: FiniteSimplicialSet, M: FiniteSimplicialSet, n: int) -> list:
    # mixed keys carry the left level so that faces can recover it
    keys = [("L", x) for x in range(K.size(n))]
    for i in range(n):
        j = n - 1 - i
        keys += [("M", (i, x), y) for x in range(K.size(i)) for y in range(M.size(j))]
    keys += [("R", y) for y in range(M.size(n))]
    return keys


def join(K: FiniteSimplicialSet, M: FiniteSimplicialSet, N: int) -> FiniteSimplicialSet:
    """``K * M`` truncated at ``N``.

    An ``n``-simplex is a simplex of ``K``, of ``M``, or a pair ``(x, y)``
    with ``x`` in ``K_i``, ``y`` in ``M_j`` and ``i + 1 + j = n``; keys are
    ``("L", x)``, ``("R", y)`` and ``("M", (i, x), y)``.  Inputs truncated
    below ``N`` are read as skeletal (no new non-degenerate simplices).
    """
    K, M = _at_least(K, N), _at_least(M, N)

    def face(n, key, k):
        if key[0] == "L":
            return ("L", K.faces[n][key[1]][k])
        if key[0] == "R":
            return ("R", M.faces[n][key[1]][k])
        (i, x), y = key[1], key[2]
        j = n - 1 - i
        if k <= i:
            if i == 0:
                return ("R", y)
            return ("M", (i - 1, K.faces[i][x][k]), y)
        if j == 0:
            return ("L", x)
        return ("M", (i, x), M.faces[j][y][k - i - 1])

    def degen(n, key, k):
        if key[0] == "L":
            return ("L", K.degens[n][key[1]][k])
        if key[0] == "R":
            return ("R", M.degens[n][key[1]][k])
        (i, x), y = key[1], key[2]
        j = n - 1 - i
        if k <= i:
            return ("M", (i + 1, K.degens[i][x][k]), y)
        return ("M", (i, x), M.degens[j][y][k - i - 1])

    def name(n, key):
        if key[0] == "L":
            return f"{K.ids[n][key[1]]}|"
        if key[0] == "R":
            return f"|{M.ids[n][key[1]]}"
        (i, x), y = key[1], key[2]
        return f"{K.ids[i][x]}|{M.ids[n - 1 - i][y]}"

    levels = [_join_level_keys(K, M, n) for n in range(N + 1)]
    return from_keys(N, levels, face, degen, name, name=f"{K.name or 'K'}*{M.name or 'M'}")


def join_simplex(J: FiniteSimplicialSet, n: int, s: int):
    """Decode an ``n``-simplex of a join: ``("L", x)``, ``("R", y)`` or ``("M", i, x, y)``."""
    key = J.keys[n][s]
    if key[0] == "M":
        (i, x), y = key[1], key[2]
        return ("M", i, x, y)
    return key


def join_index(J: FiniteSimplicialSet, n: int, part) -> int:
    if part[0] == "M":
        _, i, x, y = part
        return J.index_of_key(n, ("M", (i, x), y))
    return J.index_of_key(n, part)


def join_map(f: SimplicialMap, g: SimplicialMap, source: FiniteSimplicialSet, target: FiniteSimplicialSet) -> SimplicialMap:
    """``f * g`` between two joins built by :func:`join`."""
    d = source.dim

    def image(n, key):
        if key[0] == "L":
            return ("L", f.table[n][key[1]])
        if key[0] == "R":
            return ("R", g.table[n][key[1]])
        (i, x), y = key[1], key[2]
        return ("M", (i, f.table[i][x]), g.table[n - 1 - i][y])

    return SimplicialMap(
        source,
        target,
        tuple(tuple(target.index_of_key(n, image(n, k)) for k in source.keys[n]) for n in range(d + 1)),
    )


def right_cone(K: FiniteSimplicialSet, N: int) -> FiniteSimplicialSet:
    """``K * Delta^0`` with cone point ``inf``."""
    return join(K, point(N, "inf"), N)


def left_cone(M: FiniteSimplicialSet, N: int) -> FiniteSimplicialSet:
    """``Delta^0 * M`` with cone point ``-inf``."""
    return join(point(N, "-inf"), M, N)


def join_level_count(K: FiniteSimplicialSet, M: FiniteSimplicialSet, n: int) -> int:
    """``|K_n| + |M_n| + sum_{i+1+j=n} |K_i| |M_j|``."""
    return K.size(n) + M.size(n) + sum(K.size(i) * M.size(n - 1 - i) for i in range(n))


# ---------------------------------------------------------------------------
# slices


@dataclass(eq=False)
class SliceSet:
    """``C_{/p}`` (side ``over``) or ``C_{p/}`` (side ``under``).

    ``maps[n][k]`` is the map ``Delta^n * M -> C`` (resp. ``M * Delta^n``)
    behind simplex ``k`` of ``space`` at level ``n``; ``projection`` restricts
    to ``Delta^n``.
    """

    space: FiniteSimplicialSet
    base: FiniteSimplicialSet
    diagram: SimplicialMap
    side: str
    maps: list
    joins: list
    projection: SimplicialMap


def _diagram_pins(p: SimplicialMap, M_ext: FiniteSimplicialSet, J: FiniteSimplicialSet, side: str) -> dict:
    M = p.source
    pins = {}
    for n in range(min(p.dim, M.dim) + 1):
        for y in M.nondegenerate(n):
            ye = M_ext.index(n, M.ids[n][y])
            pins[(n, J.index_of_key(n, ("R" if side == "over" else "L", ye)))] = p.table[n][y]
    return pins


def _slice(C: FiniteSimplicialSet, p: SimplicialMap, dmax: int, side: str, budget: Budget | None) -> SliceSet:
    M = p.source
    top = M.top_nondegenerate_level()
    if top > p.dim:
        raise PreconditionError("diagram is not defined on all non-degenerate simplices")
    T = dmax + 1 + max(top, -1)
    if T > C.dim:
        raise PreconditionError(f"slice to level {dmax} needs the base truncated at >= {T}, got {C.dim}")
    M_ext = _at_least(M, T)
    stds = [standard_simplex(n, T) for n in range(dmax + 2)]
    if side == "over":
        joins = [join(stds[n], M_ext, T) for n in range(dmax + 1)]
    else:
        joins = [join(M_ext, stds[n], T) for n in range(dmax + 1)]
    levels = []
    for n in range(dmax + 1):
        pins = _diagram_pins(p, M_ext, joins[n], side)
        levels.append(list(iter_maps(joins[n], C, T, fixed=pins, budget=budget)))
    index = [{f.table: k for k, f in enumerate(level)} for level in levels]
    idM = identity_map(M_ext)

    def pull(n_from, n_to, theta, f):
        if side == "over":
            h = join_map(theta, idM, joins[n_to], joins[n_from])
        else:
            h = join_map(idM, theta, joins[n_to], joins[n_from])
        table = tuple(tuple(f.table[m][y] for y in h.table[m]) for m in range(T + 1))
        return index[n_to][table]

    faces = [[() for _ in levels[0]]]
    for n in range(1, dmax + 1):
        cof = [coface_map(n, k, T) for k in range(n + 1)]
        faces.append([tuple(pull(n, n - 1, cof[k], f) for k in range(n + 1)) for f in levels[n]])
    degens = []
    for n in range(dmax):
        cod = [codegeneracy_map(n, k, T) for k in range(n + 1)]
        degens.append([tuple(pull(n, n + 1, cod[k], f) for k in range(n + 1)) for f in levels[n]])
    degens.append([() for _ in levels[dmax]])

    def label(n, f, J):
        tag = "L" if side == "over" else "R"
        verts = [C.ids[0][f.table[0][J.index_of_key(0, (tag, v))]] for v in range(n + 1)]
        return f"{'-'.join(verts)}#{index[n][f.table]}" if n else f"{verts[0]}#{index[0][f.table]}"

    ids = [[label(n, f, joins[n]) for f in levels[n]] for n in range(dmax + 1)]
    space = FiniteSimplicialSet(
        dmax, ids, faces, degens, keys=[[f.table for f in lv] for lv in levels],
        name=f"{C.name}_{'/' if side == 'over' else ''}p{'/' if side == 'under' else ''}",
    )
    tag = "L" if side == "over" else "R"
    proj = []
    for n in range(dmax + 1):
        topkey = (tag, stds[n].index_of_key(n, tuple(range(n + 1))))
        proj.append(tuple(f.table[n][joins[n].index_of_key(n, topkey)] for f in levels[n]))
    return SliceSet(space, C, p, side, levels, joins, SimplicialMap(space, C, tuple(proj)))


def slice_over(C: FiniteSimplicialSet, p: SimplicialMap, dmax: int, budget: Budget | None = None) -> SliceSet:
    """``C_{/p}``: ``n``-simplices are maps ``Delta^n * M -> C`` extending ``p``.

    Needs ``C`` truncated at ``dmax + 1 + top`` where ``top`` is the top
    non-degenerate level of ``M``.
    """
    return _slice(C, p, dmax, "over", budget)


def coslice_under(C: FiniteSimplicialSet, p: SimplicialMap, dmax: int, budget: Budget | None = None) -> SliceSet:
    """``C_{p/}``: ``n``-simplices are maps ``M * Delta^n -> C`` extending ``p``."""
    return _slice(C, p, dmax, "under", budget)


def vertex_diagram(C: FiniteSimplicialSet, c) -> SimplicialMap:
    """The diagram ``Delta^0 -> C`` picking out the vertex ``c``."""
    c = C.index(0, c) if isinstance(c, str) else c
    return simplex_map(C, 0, c, standard_simplex(0, 0))


def empty_diagram(C: FiniteSimplicialSet) -> SimplicialMap:
    E = empty(0)
    return SimplicialMap(E, C, ((),))


def is_final(C: FiniteSimplicialSet, c, dmax: int, budget: Budget | None = None) -> Verdict:
    """``C_{/c} -> C`` lifts against boundary inclusions up to ``dmax``."""
    S = slice_over(C, vertex_diagram(C, c), dmax, budget)
    v = has_rlp(S.projection, "boundaries", dmax, budget)
    return Verdict(v.holds, v.witness, v.detail, dmax, {"slice": S})


def is_initial(C: FiniteSimplicialSet, c, dmax: int, budget: Budget | None = None) -> Verdict:
    """``C_{c/} -> C`` lifts against boundary inclusions up to ``dmax``."""
    S = coslice_under(C, vertex_diagram(C, c), dmax, budget)
    v = has_rlp(S.projection, "boundaries", dmax, budget)
    return Verdict(v.holds, v.witness, v.detail, dmax, {"slice": S})


def final_vertices(C: FiniteSimplicialSet, dmax: int, budget: Budget | None = None) -> list[str]:
    return [C.ids[0][c] for c in range(C.size(0)) if is_final(C, c, dmax, budget)]


def initial_vertices(C: FiniteSimplicialSet, dmax: int, budget: Budget | None = None) -> list[str]:
    return [C.ids[0][c] for c in range(C.size(0)) if is_initial(C, c, dmax, budget)]


@dataclass
class LimitCandidates:
    slice: SliceSet
    vertices: list  # slice vertex ids
    apexes: list  # the corresponding vertices of C


def _candidates(C, p, dmax, side, budget):
    S = _slice(C, p, dmax + 1, side, budget)
    test = is_final if side == "over" else is_initial
    found = [v for v in range(S.space.size(0)) if test(S.space, v, dmax, budget)]
    return LimitCandidates(
        S,
        [S.space.ids[0][v] for v in found],
        [C.ids[0][S.projection.table[0][v]] for v in found],
    )


def limit_candidates(C: FiniteSimplicialSet, p: SimplicialMap, dmax: int, budget: Budget | None = None) -> LimitCandidates:
    """Final vertices of ``C_{/p}`` at ``dmax`` (``C`` needs truncation ``dmax + 2 + top``)."""
    return _candidates(C, p, dmax, "over", budget)


def colimit_candidates(C: FiniteSimplicialSet, p: SimplicialMap, dmax: int, budget: Budget | None = None) -> LimitCandidates:
    """Initial vertices of ``C_{p/}`` at ``dmax``."""
    return _candidates(C, p, dmax, "under", budget)


def join_standard_iso(i: int, j: int, N: int) -> SimplicialMap:
    """The explicit isomorphism ``Delta^i * Delta^j -> Delta^{i+1+j}``.

    A left simplex keeps its vertices, a right one is shifted by ``i + 1``,
    a mixed pair concatenates the two vertex lists.
    """
    A, B = standard_simplex(i, N), standard_simplex(j, N)
    J, D = join(A, B, N), standard_simplex(i + 1 + j, N)

    def image(n, key):
        if key[0] == "L":
            return A.keys[n][key[1]]
        if key[0] == "R":
            return tuple(v + i + 1 for v in B.keys[n][key[1]])
        (a, x), y = key[1], key[2]
        return A.keys[a][x] + tuple(v + i + 1 for v in B.keys[n - 1 - a][y])

    return SimplicialMap(
        J, D, tuple(tuple(D.index_of_key(n, image(n, k)) for k in J.keys[n]) for n in range(N + 1))
    )
