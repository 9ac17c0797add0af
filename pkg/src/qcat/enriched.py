"""Simplicially enriched categories, thickened simplices and coherent nerves."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product as iproduct
from typing import Callable, Sequence

from ._common import Budget, Verdict, tick
from .category import FiniteCategory, nerve
from .lifting import check_kan
from .sset import (
    FiniteSimplicialSet,
    codiscrete,
    empty,
    from_keys,
    identity_map,
    iter_maps,
    point,
    preorder_nerve,
)


def degenerate_vertex(H: FiniteSimplicialSet, v: int, m: int) -> int:
    """The totally degenerate ``m``-simplex on the vertex ``v``."""
    for t in range(m):
        v = H.degens[t][v][0]
    return v


class FiniteSimplicialCategory:
    """Objects, hom spaces, levelwise composition tables and identity vertices.

    ``compose[(a, b, c)][n]`` maps ``(g, f)`` (``f`` in ``hom(a, b)_n``, ``g``
    in ``hom(b, c)_n``) to ``g o f`` in ``hom(a, c)_n``.  Pairs missing from
    ``homs`` have empty hom spaces.
    """

    def __init__(self, objects, homs: dict, compose: dict, identities: dict, name: str = ""):
        self.objects = tuple(objects)
        dims = [H.dim for H in homs.values()]
        self.dim = min(dims) if dims else 0
        self.homs = {}
        for a, b in iproduct(self.objects, self.objects):
            self.homs[(a, b)] = homs.get((a, b)) or empty(self.dim)
        self.table = compose
        self.identities = dict(identities)
        self.name = name

    def hom(self, a, b) -> FiniteSimplicialSet:
        return self.homs[(a, b)]

    def compose(self, a, b, c, n: int, g: int, f: int) -> int:
        return self.table[(a, b, c)][n][(g, f)]

    def identity(self, a, n: int = 0) -> int:
        return degenerate_vertex(self.hom(a, a), self.identities[a], n)

    def validate(self) -> list[str]:
        """Failures of simplicial compatibility, associativity and unitality."""
        out = []
        obs = self.objects
        for a, b, c in iproduct(obs, obs, obs):
            A, B, C = self.hom(a, b), self.hom(b, c), self.hom(a, c)
            for n in range(self.dim + 1):
                for g, f in iproduct(range(B.size(n)), range(A.size(n))):
                    h = self.compose(a, b, c, n, g, f)
                    if n:
                        for i in range(n + 1):
                            lhs = C.faces[n][h][i]
                            rhs = self.compose(a, b, c, n - 1, B.faces[n][g][i], A.faces[n][f][i])
                            if lhs != rhs:
                                out.append(f"d{i} of composite {B.ids[n][g]} o {A.ids[n][f]} in {a},{b},{c}")
                    if n < self.dim:
                        for j in range(n + 1):
                            lhs = C.degens[n][h][j]
                            rhs = self.compose(a, b, c, n + 1, B.degens[n][g][j], A.degens[n][f][j])
                            if lhs != rhs:
                                out.append(f"s{j} of composite {B.ids[n][g]} o {A.ids[n][f]} in {a},{b},{c}")
        for a, b in iproduct(obs, obs):
            H = self.hom(a, b)
            for n in range(self.dim + 1):
                for f in range(H.size(n)):
                    if self.compose(a, a, b, n, f, self.identity(a, n)) != f:
                        out.append(f"right unit fails at {H.ids[n][f]}")
                    if self.compose(a, b, b, n, self.identity(b, n), f) != f:
                        out.append(f"left unit fails at {H.ids[n][f]}")
        for a, b, c, d in iproduct(obs, obs, obs, obs):
            F, G, K = self.hom(a, b), self.hom(b, c), self.hom(c, d)
            for n in range(self.dim + 1):
                for f, g, k in iproduct(range(F.size(n)), range(G.size(n)), range(K.size(n))):
                    lhs = self.compose(a, c, d, n, k, self.compose(a, b, c, n, g, f))
                    rhs = self.compose(a, b, d, n, self.compose(b, c, d, n, k, g), f)
                    if lhs != rhs:
                        out.append(f"associativity fails at ({K.ids[n][k]}, {G.ids[n][g]}, {F.ids[n][f]})")
        return out

    def __repr__(self) -> str:
        return f"<FiniteSimplicialCategory {self.name} objects={list(self.objects)} dim={self.dim}>"


def simplicial_category(
    objects: Sequence,
    homs: dict,
    compose_fn: Callable,
    identities: dict,
    name: str = "",
) -> FiniteSimplicialCategory:
    """Tabulate ``compose_fn(a, b, c, n, g, f) -> h`` over every level."""
    objects = list(objects)
    dims = [H.dim for H in homs.values()]
    N = min(dims) if dims else 0
    full = {(a, b): homs.get((a, b)) or empty(N) for a, b in iproduct(objects, objects)}
    table = {}
    for a, b, c in iproduct(objects, objects, objects):
        A, B = full[(a, b)], full[(b, c)]
        table[(a, b, c)] = [
            {(g, f): compose_fn(a, b, c, n, g, f) for g in range(B.size(n)) for f in range(A.size(n))}
            for n in range(N + 1)
        ]
    return FiniteSimplicialCategory(objects, full, table, identities, name)


def discrete_simplicial_category(C: FiniteCategory, N: int) -> FiniteSimplicialCategory:
    """``C`` with each hom set viewed as a discrete simplicial set."""
    homs = {}
    for a, b in iproduct(C.objects, C.objects):
        ms = C.hom(a, b)
        homs[(a, b)] = from_keys(
            N,
            [[(m, n) for m in ms] for n in range(N + 1)],
            lambda n, k, i: (k[0], n - 1),
            lambda n, k, j: (k[0], n + 1),
            lambda n, k: k[0] if n == 0 else ".".join(f"s{t}" for t in range(n - 1, -1, -1)) + "." + k[0],
            name=f"{a}->{b}",
        )

    def comp(a, b, c, n, g, f):
        A, B, H = homs[(a, b)], homs[(b, c)], homs[(a, c)]
        return H.index_of_key(n, (C.compose(B.keys[n][g][0], A.keys[n][f][0]), n))

    ids = {a: homs[(a, a)].index_of_key(0, (C.identity(a), 0)) for a in C.objects}
    return simplicial_category(C.objects, homs, comp, ids, name=C.name)


def one_object_category(H: FiniteSimplicialSet, mult: Callable[[int, int, int], int], unit: int, obj="*", name: str = "") -> FiniteSimplicialCategory:
    """One object with endomorphism space ``H`` and ``g o f = mult(n, g, f)``."""
    return simplicial_category([obj], {(obj, obj): H}, lambda a, b, c, n, g, f: mult(n, g, f), {obj: unit}, name)


def group_nerve_category(G: FiniteCategory, N: int) -> FiniteSimplicialCategory:
    """One object whose endomorphisms are the nerve of an abelian group ``G``.

    Composition multiplies chains entrywise, which is simplicial because
    ``G`` is abelian.
    """
    H = nerve(G, N)
    star = G.objects[0]

    def mult(n, g, f):
        if n == 0:
            return 0
        kg, kf = H.keys[n][g], H.keys[n][f]
        return H.index_of_key(n, tuple(G.compose(x, y) for x, y in zip(kg, kf)))

    for x in G.morphisms:
        for y in G.morphisms:
            if G.compose(x, y) != G.compose(y, x):
                raise ValueError("group must be abelian")
    return one_object_category(H, mult, H.index_of_key(0, ("o", star)), name=f"N({G.name})")


def codiscrete_monoid_category(elements: Sequence, mult: Callable, unit, N: int) -> FiniteSimplicialCategory:
    """One object whose endomorphisms form the codiscrete space on a finite monoid."""
    H = codiscrete([str(e) for e in elements], N, name="E")
    m = {(str(a), str(b)): str(mult(a, b)) for a in elements for b in elements}

    def comp(n, g, f):
        return H.index_of_key(n, tuple(m[(x, y)] for x, y in zip(H.keys[n][g], H.keys[n][f])))

    return one_object_category(H, comp, H.index_of_key(0, (str(unit),)), name="codiscrete")


def arrow_category(H: FiniteSimplicialSet, x="x", y="y") -> FiniteSimplicialCategory:
    """Two objects ``x``, ``y`` with ``hom(x, y) = H`` and trivial endomorphisms."""
    N = H.dim
    homs = {(x, x): point(N, f"id_{x}"), (y, y): point(N, f"id_{y}"), (x, y): H}

    def comp(a, b, c, n, g, f):
        if a == b:
            return g
        return f

    return simplicial_category([x, y], homs, comp, {x: 0, y: 0}, name=f"arrow({H.name})")


# ---------------------------------------------------------------------------
# thickened simplices


@dataclass(frozen=True)
class PathPoset:
    """Subsets of ``[i, j]`` containing both ends, ordered by inclusion."""

    i: int
    j: int
    elements: tuple

    def leq(self, U, V) -> bool:
        return U <= V

    def __len__(self) -> int:
        return len(self.elements)


def _subset_label(S) -> str:
    vs = sorted(S)
    return "".join(str(v) for v in vs) if all(v <= 9 for v in vs) else ",".join(str(v) for v in vs)


def path_poset(i: int, j: int) -> PathPoset:
    if i > j:
        raise ValueError("path posets need i <= j")
    inner = list(range(i + 1, j))
    elems = []
    for r in range(len(inner) + 1):
        for mask in combinations(inner, r):
            elems.append(frozenset((i, j, *mask)))
    return PathPoset(i, j, tuple(elems))


@lru_cache(maxsize=None)
def thickened_simplex(n: int, N: int) -> FiniteSimplicialCategory:
    """``C[Delta^n]``: ``hom(i, j)`` is the nerve of ``P_{i,j}``, composition is union."""
    objects = list(range(n + 1))
    homs = {}
    for i in range(n + 1):
        for j in range(i, n + 1):
            P = path_poset(i, j)
            homs[(i, j)] = preorder_nerve(P.elements, P.leq, N, _subset_label, sep="<", name=f"P{i}{j}")

    def comp(a, b, c, m, g, f):
        H = homs[(a, c)]
        U, V = homs[(b, c)].keys[m][g], homs[(a, b)].keys[m][f]
        return H.index_of_key(m, tuple(u | v for u, v in zip(U, V)))

    ids = {i: 0 for i in objects}
    return simplicial_category(objects, homs, comp, ids, name=f"C[Delta^{n}]")


def nondegenerate_table(C: FiniteSimplicialCategory, a, b) -> dict[int, list[str]]:
    """Non-degenerate simplices of ``hom(a, b)`` by level."""
    H = C.hom(a, b)
    return {n: [H.ids[n][x] for x in H.nondegenerate(n)] for n in range(H.dim + 1) if H.nondegenerate(n)}


# ---------------------------------------------------------------------------
# coherent nerve


@dataclass(frozen=True)
class CoherentSimplex:
    """A simplicial functor ``C[Delta^n] -> C``.

    ``maps`` lists, for each pair ``i < j`` in order, the table of the map
    ``N P_{i,j} -> hom(F i, F j)``.
    """

    objects: tuple
    maps: tuple


def _pairs(n: int) -> list[tuple[int, int]]:
    return [(i, j) for d in range(1, n + 1) for i in range(n + 1 - d) for j in (i + d,)]


def enumerate_coherent_simplices(C: FiniteSimplicialCategory, n: int, L: int, budget: Budget | None = None) -> list[CoherentSimplex]:
    """All simplicial functors ``C[Delta^n] -> C``, hom maps on levels ``0..L``."""
    T = thickened_simplex(n, L)
    pairs = _pairs(n)
    out = []

    def image(objs, chosen, i, j, m, chain):
        if i == j:
            return C.identity(objs[i], m)
        return chosen[(i, j)][m][T.hom(i, j).index_of_key(m, chain)]

    def pins_for(objs, chosen, i, j):
        P = T.hom(i, j)
        pins = {}
        for m in range(L + 1):
            for x in range(P.size(m)):
                chain = P.keys[m][x]
                inner = sorted(chain[0] - {i, j})
                if not inner:
                    continue
                k = inner[0]
                left = tuple(frozenset(v for v in U if v <= k) for U in chain)
                right = tuple(frozenset(v for v in U if v >= k) for U in chain)
                g = image(objs, chosen, k, j, m, right)
                f = image(objs, chosen, i, k, m, left)
                pins[(m, x)] = C.compose(objs[i], objs[k], objs[j], m, g, f)
        return pins

    def rec(objs, t, chosen):
        if t == len(pairs):
            out.append(CoherentSimplex(objs, tuple(tuple(chosen[p]) for p in pairs)))
            return
        i, j = pairs[t]
        target = C.hom(objs[i], objs[j])
        pins = pins_for(objs, chosen, i, j)
        for f in iter_maps(T.hom(i, j), target, L, fixed=pins, budget=budget):
            tick(budget)
            chosen[(i, j)] = f.table
            rec(objs, t + 1, chosen)
        chosen.pop((i, j), None)

    for objs in iproduct(C.objects, repeat=n + 1):
        rec(tuple(objs), 0, {})
    return out


def _pull(C: FiniteSimplicialCategory, s: CoherentSimplex, n: int, theta: Sequence[int], L: int) -> CoherentSimplex:
    """Precompose ``s`` with ``C[theta]`` for monotone ``theta: [p] -> [n]``."""
    p = len(theta) - 1
    T_src, T_tgt = thickened_simplex(p, L), thickened_simplex(n, L)
    tgt_maps = dict(zip(_pairs(n), s.maps))
    objs = tuple(s.objects[theta[a]] for a in range(p + 1))
    maps = []
    for a, b in _pairs(p):
        P = T_src.hom(a, b)
        ta, tb = theta[a], theta[b]
        table = []
        for m in range(L + 1):
            if ta == tb:
                v = C.identity(s.objects[ta], m)
                table.append(tuple(v for _ in range(P.size(m))))
                continue
            Q = T_tgt.hom(ta, tb)
            row = []
            for chain in P.keys[m]:
                img = tuple(frozenset(theta[v] for v in U) for U in chain)
                row.append(tgt_maps[(ta, tb)][m][Q.index_of_key(m, img)])
            table.append(tuple(row))
        maps.append(tuple(table))
    return CoherentSimplex(objs, tuple(maps))


def coherent_nerve(C: FiniteSimplicialCategory, dmax: int, budget: Budget | None = None) -> FiniteSimplicialSet:
    """``N_Delta(C)`` on levels ``0..dmax``: ``n``-simplices are simplicial functors
    ``C[Delta^n] -> C``.  Hom spaces of ``C`` must be truncated at ``>= dmax - 1``.
    """
    L = max(dmax - 1, 0)
    if C.dim < L:
        raise ValueError(f"hom spaces truncated at {C.dim}, need {L}")
    levels = [enumerate_coherent_simplices(C, n, L, budget) for n in range(dmax + 1)]

    def face(n, s, i):
        return _pull(C, s, n, [v + (v >= i) for v in range(n)], L)

    def degen(n, s, j):
        return _pull(C, s, n, [v - (v > j) for v in range(n + 2)], L)

    names = {}
    for n, level in enumerate(levels):
        groups: dict = {}
        for s in level:
            if n == 0:
                base = str(s.objects[0])
            else:
                edges = dict(zip(_pairs(n), s.maps))
                parts = []
                for i in range(n):
                    H = C.hom(s.objects[i], s.objects[i + 1])
                    parts.append(H.ids[0][edges[(i, i + 1)][0][0]])
                base = "|".join(parts)
            groups.setdefault(base, []).append(s)
        for base, ss in groups.items():
            for k, s in enumerate(ss):
                names[(n, s)] = base if len(ss) == 1 else f"{base}~{k}"

    return from_keys(dmax, levels, face, degen, lambda n, s: names[(n, s)], name=f"N_Delta({C.name})")


# ---------------------------------------------------------------------------
# pi_0 and local Kan-ness


def components(H: FiniteSimplicialSet) -> list[int]:
    """Component representative (smallest vertex) of each vertex."""
    parent = list(range(H.size(0)))

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    if H.dim >= 1:
        for e in range(H.size(1)):
            a, b = find(H.faces[1][e][0]), find(H.faces[1][e][1])
            if a != b:
                parent[max(a, b)] = min(a, b)
    return [find(v) for v in range(H.size(0))]


class IllDefinedComposition(ValueError):
    pass


def pi0_change_of_base(C: FiniteSimplicialCategory) -> FiniteCategory:
    """``pi_0 C``: hom sets are connected components; composition on vertices."""
    comp = {pair: components(H) for pair, H in C.homs.items()}
    names: dict = {}
    used: dict = {}
    for (a, b), H in C.homs.items():
        for r in sorted(set(comp[(a, b)])):
            base = f"[{H.ids[0][r]}]"
            used[base] = used.get(base, 0) + 1
    for (a, b), H in C.homs.items():
        for r in sorted(set(comp[(a, b)])):
            base = f"[{H.ids[0][r]}]"
            names[(a, b, r)] = base if used[base] == 1 else f"{base}{a}{b}"
    morphisms = {names[(a, b, r)]: (a, b) for (a, b, r) in names}
    table = {}
    for a, b, c in iproduct(C.objects, C.objects, C.objects):
        A, B = C.hom(a, b), C.hom(b, c)
        for f, g in iproduct(range(A.size(0)), range(B.size(0))):
            h = comp[(a, c)][C.compose(a, b, c, 0, g, f)]
            key = (names[(b, c, comp[(b, c)][g])], names[(a, b, comp[(a, b)][f])])
            val = names[(a, c, h)]
            if table.setdefault(key, val) != val:
                raise IllDefinedComposition(f"composition of {key[0]} o {key[1]} depends on representatives")
    ids = {a: names[(a, a, comp[(a, a)][C.identities[a]])] for a in C.objects}
    return FiniteCategory(C.objects, morphisms, table, ids, name=f"pi0({C.name})")


def is_locally_kan(C: FiniteSimplicialCategory, dmax: int, budget: Budget | None = None) -> Verdict:
    """Every hom space passes ``check_kan`` up to ``min(dmax, truncation)``."""
    d = min(dmax, C.dim)
    for pair, H in C.homs.items():
        v = check_kan(H, d, budget)
        if not v:
            return Verdict(False, (pair, v.failure_witness), f"hom{pair}: {v.render(H)}", d)
    return Verdict(True, None, f"all hom spaces Kan up to dim {d}", d)


# ---------------------------------------------------------------------------
# simplicial functors


@dataclass
class SimplicialFunctor:
    source: FiniteSimplicialCategory
    target: FiniteSimplicialCategory
    objects: dict
    maps: dict  # (a, b) -> SimplicialMap hom(a, b) -> hom(Fa, Fb)

    def validate(self) -> list[str]:
        out = []
        C, D = self.source, self.target
        for a in C.objects:
            if self.maps[(a, a)].table[0][C.identities[a]] != D.identities[self.objects[a]]:
                out.append(f"identity of {a} not preserved")
        for a, b, c in iproduct(C.objects, C.objects, C.objects):
            A, B = C.hom(a, b), C.hom(b, c)
            Fa, Fb, Fc = self.objects[a], self.objects[b], self.objects[c]
            for n in range(min(C.dim, D.dim) + 1):
                for g, f in iproduct(range(B.size(n)), range(A.size(n))):
                    lhs = self.maps[(a, c)].table[n][C.compose(a, b, c, n, g, f)]
                    rhs = D.compose(Fa, Fb, Fc, n, self.maps[(b, c)].table[n][g], self.maps[(a, b)].table[n][f])
                    if lhs != rhs:
                        out.append(f"composition not preserved at {B.ids[n][g]} o {A.ids[n][f]}")
        return out


@dataclass
class DKReport:
    essentially_surjective: bool
    missing: list = field(default_factory=list)
    pi0_bijective: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.essentially_surjective and all(self.pi0_bijective.values())

    def lines(self) -> list[str]:
        out = [f"pi0 essentially surjective: {'yes' if self.essentially_surjective else 'no'}"]
        if self.missing:
            out.append(f"  objects not reached: {', '.join(map(str, self.missing))}")
        for pair, ok in self.pi0_bijective.items():
            out.append(f"pi0 bijective on {pair[0]},{pair[1]}: {'yes' if ok else 'no'}")
        return out


def dk_pi0_check(F: SimplicialFunctor) -> DKReport:
    """pi_0-level shadow of a Dwyer-Kan equivalence (not a full check)."""
    C, D = F.source, F.target
    pD = pi0_change_of_base(D)
    image = {F.objects[a] for a in C.objects}
    missing = []
    for d in D.objects:
        if d in image:
            continue
        if not any(pD.is_iso(m) for e in image for m in pD.hom(e, d)):
            missing.append(d)
    bij = {}
    for (a, b), f in F.maps.items():
        cs, ct = components(C.hom(a, b)), components(D.hom(F.objects[a], F.objects[b]))
        induced = {}
        ok = True
        for v in range(C.hom(a, b).size(0)):
            w = ct[f.table[0][v]]
            if induced.setdefault(cs[v], w) != w:
                ok = False
        ok = ok and len(set(induced.values())) == len(induced) == len(set(cs)) and set(induced.values()) == set(ct)
        bij[(a, b)] = ok
    return DKReport(not missing, missing, bij)


def identity_functor(C: FiniteSimplicialCategory) -> SimplicialFunctor:
    return SimplicialFunctor(C, C, {a: a for a in C.objects}, {p: identity_map(H) for p, H in C.homs.items()})
