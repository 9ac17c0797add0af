"""Finite categories given by composition tables, and their nerves."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Iterable, Sequence

from .lifting import check_unique_inner_fillers
from .sset import FiniteSimplicialSet, from_keys


@dataclass
class CategoryReport:
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok


class FiniteCategory:
    """Objects, morphisms with source/target, a total composition table, identities.

    ``compose(g, f)`` is ``g o f`` (first ``f``, then ``g``).
    """

    def __init__(self, objects, morphisms, compose, identities, name=""):
        self.objects = tuple(objects)
        self.src = {m: s for m, (s, t) in morphisms.items()}
        self.tgt = {m: t for m, (s, t) in morphisms.items()}
        self.morphisms = tuple(morphisms)
        self.table = dict(compose)
        self.identities = dict(identities)
        self.name = name
        self._homs: dict = {}
        for m in self.morphisms:
            self._homs.setdefault((self.src[m], self.tgt[m]), []).append(m)
        self._inverse_cache: dict = {}
        self._outs: dict = {}

    def hom(self, a, b) -> list:
        return self._homs.get((a, b), [])

    def identity(self, a):
        return self.identities[a]

    def compose(self, g, f):
        try:
            return self.table[(g, f)]
        except KeyError:
            raise KeyError(f"composite {g} o {f} undefined") from None

    def compose_path(self, *ms):
        """``ms[0] o ms[1] o ...``."""
        out = ms[-1]
        for m in reversed(ms[:-1]):
            out = self.compose(m, out)
        return out

    def source(self, f):
        return self.src[f]

    def target(self, f):
        return self.tgt[f]

    def render(self, f) -> str:
        return str(f)

    def is_iso(self, f) -> bool:
        return self.inverse(f) is not None

    def inverse(self, f):
        if f not in self._inverse_cache:
            a, b = self.src[f], self.tgt[f]
            self._inverse_cache[f] = next(
                (
                    g
                    for g in self.hom(b, a)
                    if self.compose(g, f) == self.identities[a] and self.compose(f, g) == self.identities[b]
                ),
                None,
            )
        return self._inverse_cache[f]

    def __repr__(self) -> str:
        return f"<FiniteCategory {self.name} |Ob|={len(self.objects)} |Mor|={len(self.morphisms)}>"

    def validate(self) -> CategoryReport:
        rep = CategoryReport()
        objs = set(self.objects)
        for m in self.morphisms:
            if self.src[m] not in objs or self.tgt[m] not in objs:
                rep.failures.append(("dangling morphism", m))
        for a in self.objects:
            i = self.identities.get(a)
            if i is None or self.src.get(i) != a or self.tgt.get(i) != a:
                rep.failures.append(("identity", a))
        if rep.failures:
            return rep
        for f in self.morphisms:
            for g in self._out(self.tgt[f]):
                h = self.table.get((g, f))
                if h is None:
                    rep.failures.append(("missing composite", (g, f)))
                elif self.src.get(h) != self.src[f] or self.tgt.get(h) != self.tgt[g]:
                    rep.failures.append(("composite has wrong ends", (g, f)))
        if rep.failures:
            return rep
        for f in self.morphisms:
            a, b = self.src[f], self.tgt[f]
            if self.compose(f, self.identities[a]) != f or self.compose(self.identities[b], f) != f:
                rep.failures.append(("unit law", f))
        for f in self.morphisms:
            for g in self._out(self.tgt[f]):
                gf = self.compose(g, f)
                for h in self._out(self.tgt[g]):
                    if self.compose(h, gf) != self.compose(self.compose(h, g), f):
                        rep.failures.append(("associativity", (h, g, f)))
        return rep

    def _out(self, a) -> list:
        if a not in self._outs:
            self._outs[a] = [m for m in self.morphisms if self.src[m] == a]
        return self._outs[a]

    def out_of(self, a) -> list:
        return self._out(a)


# ---------------------------------------------------------------------------
# builders


def poset_category(elements: Sequence, leq: Iterable[tuple], name: str = "") -> FiniteCategory:
    """Thin category of a poset; ``leq`` generates the order (closed here)."""
    elements = list(elements)
    rel = {(a, a) for a in elements} | set(leq)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in iproduct(list(rel), list(rel)):
            if b == c and (a, d) not in rel:
                rel.add((a, d))
                changed = True
    for a, b in rel:
        if a != b and (b, a) in rel:
            raise ValueError(f"not antisymmetric: {a}, {b}")
    order = {a: k for k, a in enumerate(elements)}
    pairs = sorted(rel, key=lambda p: (order[p[0]], order[p[1]]))
    mname = {p: (f"id_{p[0]}" if p[0] == p[1] else f"{p[0]}<{p[1]}") for p in pairs}
    morphisms = {mname[p]: p for p in pairs}
    compose = {}
    for (a, b), (c, d) in iproduct(pairs, pairs):
        if b == c:
            compose[(mname[(c, d)], mname[(a, b)])] = mname[(a, d)]
    return FiniteCategory(elements, morphisms, compose, {a: mname[(a, a)] for a in elements}, name=name)


def ordinal(n: int) -> FiniteCategory:
    """The poset [n] = {0 < 1 < ... < n}."""
    return poset_category(list(range(n + 1)), [(i, i + 1) for i in range(n)], name=f"[{n}]")


def terminal_category() -> FiniteCategory:
    return ordinal(0)


def group_category(elements: Sequence, mult, identity, name: str = "", obj="*") -> FiniteCategory:
    """One-object category of a finite group (or monoid); ``mult(g, h) = g*h``.

    Composition ``g o h`` is ``mult(g, h)``.
    """
    mor = {str(g): (obj, obj) for g in elements}
    compose = {(str(g), str(h)): str(mult(g, h)) for g in elements for h in elements}
    return FiniteCategory([obj], mor, compose, {obj: str(identity)}, name=name)


def cyclic_group(n: int) -> FiniteCategory:
    return group_category([f"g{k}" for k in range(n)], lambda a, b: f"g{(int(a[1:]) + int(b[1:])) % n}", "g0", name=f"C{n}")


def discrete_category(objects: Sequence) -> FiniteCategory:
    return poset_category(objects, [], name="discrete")


def walking_idempotent() -> FiniteCategory:
    """One object, morphisms {1, e} with e o e = e: a non-thin, non-groupoid category."""
    return group_category(["1", "e"], lambda a, b: "1" if a == b == "1" else "e", "1", name="idem")


def parallel_pair() -> FiniteCategory:
    """Two objects with two parallel arrows a, b: x -> y."""
    mor = {"id_x": ("x", "x"), "id_y": ("y", "y"), "a": ("x", "y"), "b": ("x", "y")}
    compose = {("id_x", "id_x"): "id_x", ("id_y", "id_y"): "id_y"}
    for f in ("a", "b"):
        compose[(f, "id_x")] = f
        compose[("id_y", f)] = f
    return FiniteCategory(["x", "y"], mor, compose, {"x": "id_x", "y": "id_y"}, name="parallel")


def cone_category(C: FiniteCategory, apex="inf") -> FiniteCategory:
    """``C * [0]``: adjoin a terminal object ``apex``."""
    mor = {m: (C.src[m], C.tgt[m]) for m in C.morphisms}
    ida = f"id_{apex}"
    mor[ida] = (apex, apex)
    to = {a: f"{a}>{apex}" for a in C.objects}
    for a in C.objects:
        mor[to[a]] = (a, apex)
    compose = dict(C.table)
    compose[(ida, ida)] = ida
    for a in C.objects:
        compose[(ida, to[a])] = to[a]
    for f in C.morphisms:
        compose[(to[C.tgt[f]], f)] = to[C.src[f]]
    ids = dict(C.identities)
    ids[apex] = ida
    return FiniteCategory(list(C.objects) + [apex], mor, compose, ids, name=f"{C.name}*[0]")


def with_composite(C: FiniteCategory, g, f, h) -> FiniteCategory:
    """A copy of ``C`` whose table sends ``(g, f)`` to ``h`` (corruption helper)."""
    table = dict(C.table)
    table[(g, f)] = h
    return FiniteCategory(C.objects, {m: (C.src[m], C.tgt[m]) for m in C.morphisms}, table, C.identities, name=C.name + "'")


# ---------------------------------------------------------------------------
# nerves


def _commutes(C: FiniteCategory, chain: tuple) -> bool:
    # the triangles through the last vertex: f_{i,n} == f_{j,n} o f_{i,j}
    n = len(chain)
    span = {}
    for i in range(n):
        f = chain[i]
        span[(i, i + 1)] = f
        for j in range(i + 2, n + 1):
            f = C.compose(chain[j - 1], f)
            span[(i, j)] = f
    return all(
        span[(i, n)] == C.compose(span[(j, n)], span[(i, j)]) for i in range(n) for j in range(i + 1, n)
    )


def nerve(C: FiniteCategory, N: int) -> FiniteSimplicialSet:
    """``N(C)`` truncated at ``N``: n-simplices are composable chains of length n.

    A vertex has key ``(obj,)`` style ``("o", a)``; an n-simplex (n >= 1) the
    tuple of its n morphisms in order of travel.  Only chains on which every
    triangle commutes are kept; for a lawful table that is all of them, and a
    table that fails associativity still yields a simplicial set.
    """
    levels: list[list] = [[("o", a) for a in C.objects]]
    if N >= 1:
        levels.append([(m,) for m in C.morphisms])
    for n in range(2, N + 1):
        levels.append(
            [c + (g,) for c in levels[-1] for g in C.out_of(C.tgt[c[-1]]) if _commutes(C, c + (g,))]
        )

    def face(n, key, i):
        if n == 1:
            m = key[0]
            return ("o", C.tgt[m]) if i == 0 else ("o", C.src[m])
        if i == 0:
            return key[1:]
        if i == n:
            return key[:-1]
        return key[: i - 1] + (C.compose(key[i], key[i - 1]),) + key[i + 1 :]

    def degen(n, key, j):
        if n == 0:
            return (C.identity(key[1]),)
        obj = C.src[key[0]] if j == 0 else C.tgt[key[j - 1]]
        return key[:j] + (C.identity(obj),) + key[j:]

    def name(n, key):
        if n == 0:
            return str(key[1])
        return "|".join(str(m) for m in key)

    return from_keys(N, levels, face, degen, name, name=f"N({C.name})")


def recognize_nerve(X: FiniteSimplicialSet, dmax: int = 3) -> FiniteCategory | None:
    """Read a category off ``X`` if its inner horns fill uniquely.

    Objects are the vertices, morphisms the edges, identities the
    degenerate edges, composition the ``d_1`` of the unique ``Lambda^2_1``
    filler.  The result is checked for associativity and unitality; None is
    returned when any step fails.
    """
    if X.dim < 2:
        return None
    if not check_unique_inner_fillers(X, min(dmax, X.dim)):
        return None
    objects = list(X.ids[0])
    mor = {X.ids[1][e]: (X.ids[0][X.faces[1][e][1]], X.ids[0][X.faces[1][e][0]]) for e in range(X.size(1))}
    ids = {X.ids[0][v]: X.ids[1][X.degens[0][v][0]] for v in range(X.size(0))}
    compose = {}
    table = X.horn_lookup(2, 1)
    for f in range(X.size(1)):
        for g in X.single_face_lookup(1, 1).get(X.faces[1][f][0], ()):
            fillers = table.get((g, f), ())
            if len(fillers) != 1:
                return None
            compose[(X.ids[1][g], X.ids[1][f])] = X.ids[1][X.faces[2][fillers[0]][1]]
    C = FiniteCategory(objects, mor, compose, ids, name=f"rec({X.name})")
    return C if C.validate().ok else None


def find_category_isomorphism(C: FiniteCategory, D: FiniteCategory):
    """``(object_map, morphism_map)`` of an isomorphism ``C -> D`` or None."""
    if len(C.objects) != len(D.objects) or len(C.morphisms) != len(D.morphisms):
        return None
    cobjs = list(C.objects)

    def hom_sizes(K, a, b):
        return len(K.hom(a, b))

    def assign_objects(k, omap, used):
        if k == len(cobjs):
            yield dict(omap)
            return
        a = cobjs[k]
        for b in D.objects:
            if b in used:
                continue
            omap[a] = b
            ok = all(
                hom_sizes(C, a, a2) == hom_sizes(D, b, omap[a2]) and hom_sizes(C, a2, a) == hom_sizes(D, omap[a2], b)
                for a2 in cobjs[: k + 1]
            )
            if ok:
                used.add(b)
                yield from assign_objects(k + 1, omap, used)
                used.discard(b)
            del omap[a]

    for omap in assign_objects(0, {}, set()):
        mors = list(C.morphisms)

        def assign_mors(k, mmap, used):
            if k == len(mors):
                yield dict(mmap)
                return
            f = mors[k]
            cands = D.hom(omap[C.src[f]], omap[C.tgt[f]])
            if f == C.identities[C.src[f]] and C.src[f] == C.tgt[f]:
                cands = [D.identities[omap[C.src[f]]]]
            for g in cands:
                if g in used:
                    continue
                mmap[f] = g
                ok = True
                for f1 in mors[: k + 1]:
                    for f2 in mors[: k + 1]:
                        if C.tgt[f1] == C.src[f2]:
                            h = C.compose(f2, f1)
                            if h in mmap and mmap[h] != D.compose(mmap[f2], mmap[f1]):
                                ok = False
                                break
                    if not ok:
                        break
                if ok:
                    used.add(g)
                    yield from assign_mors(k + 1, mmap, used)
                    used.discard(g)
                del mmap[f]

        for mmap in assign_mors(0, {}, set()):
            return omap, mmap
    return None
