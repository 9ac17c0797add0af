"""The total category ``M^(x)`` of a monoidal presentation over a truncated
base (Delta^op or Fin), coCartesian arrows, pushforwards, extraction of the
monoidal structure, and algebra objects as sections.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product as iproduct
from typing import Callable, Iterator, Sequence

from ._common import Budget, PreconditionError, Verdict, tick
from .monoidal import (
    MonoidalPresentation,
    UNIT_WORD,
    coherence_iso,
    is_monoid,
    left_normal,
    left_normal_object,
    permutation_iso,
    t,
    tensor_all,
    validate_monoidal,
)


# ---------------------------------------------------------------------------
# base categories


@dataclass(frozen=True)
class DeltaMorphism:
    """Monotone ``[domain] -> [codomain]``; ``values[i]`` is the image of ``i``.

    In the total category it is read as an arrow ``[codomain] -> [domain]``
    of ``Delta^op``.
    """

    domain: int
    codomain: int
    values: tuple

    def __post_init__(self):
        v = self.values
        if len(v) != self.domain + 1 or any(x < 0 or x > self.codomain for x in v):
            raise ValueError(f"bad monotone map {v} : [{self.domain}] -> [{self.codomain}]")
        if any(a > b for a, b in zip(v, v[1:])):
            raise ValueError(f"{v} is not monotone")
        object.__setattr__(self, "_hash", hash(("d", self.codomain, v)))

    def __hash__(self) -> int:
        return self._hash

    def __call__(self, i: int) -> int:
        return self.values[i]

    def __str__(self) -> str:
        return "d(" + ",".join(map(str, self.values)) + f")->[{self.codomain}]"


def delta(values: Sequence[int], codomain: int | None = None) -> DeltaMorphism:
    values = tuple(values)
    return DeltaMorphism(len(values) - 1, max(values) if codomain is None else codomain, values)


def delta_compose(a: DeltaMorphism, b: DeltaMorphism) -> DeltaMorphism:
    """``a o b``."""
    if b.codomain != a.domain:
        raise ValueError("maps are not composable")
    return DeltaMorphism(b.domain, a.codomain, tuple(a.values[x] for x in b.values))


def delta_identity(n: int) -> DeltaMorphism:
    return DeltaMorphism(n, n, tuple(range(n + 1)))


def monotone_maps(k: int, n: int) -> list[DeltaMorphism]:
    return [DeltaMorphism(k, n, v) for v in combinations_with_replacement(range(n + 1), k + 1)]


def is_convex(a: DeltaMorphism) -> bool:
    """Injective with image an interval."""
    v = a.values
    return all(y == x + 1 for x, y in zip(v, v[1:]))


def iota(i: int, n: int) -> DeltaMorphism:
    """The inclusion ``[1] -> [n]`` onto ``{i-1, i}``."""
    if not 1 <= i <= n:
        raise ValueError(f"need 1 <= i <= n, got i={i}, n={n}")
    return DeltaMorphism(1, n, (i - 1, i))


@dataclass(frozen=True)
class FinMorphism:
    """Pointed map ``<domain>_* -> <codomain>_*``; ``values[0] == 0`` is the base point."""

    domain: int
    codomain: int
    values: tuple

    def __post_init__(self):
        v = self.values
        if len(v) != self.domain + 1 or v[0] != 0 or any(x < 0 or x > self.codomain for x in v):
            raise ValueError(f"bad pointed map {v} : <{self.domain}> -> <{self.codomain}>")
        object.__setattr__(self, "_hash", hash(("f", self.codomain, v)))

    def __hash__(self) -> int:
        return self._hash

    def __call__(self, j: int) -> int:
        return self.values[j]

    def __str__(self) -> str:
        return "[" + ",".join("*" if x == 0 else str(x) for x in self.values[1:]) + f"]->{self.codomain}"


def fin(values: Sequence[int], codomain: int | None = None) -> FinMorphism:
    """From the images of ``1..n`` (``0`` or ``"*"`` for the base point)."""
    vals = tuple(0 if x in ("*", None) else int(x) for x in values)
    cod = max(vals, default=0) if codomain is None else codomain
    return FinMorphism(len(vals), cod, (0,) + vals)


def fin_compose(b: FinMorphism, a: FinMorphism) -> FinMorphism:
    """``b o a``."""
    if a.codomain != b.domain:
        raise ValueError("maps are not composable")
    return FinMorphism(a.domain, b.codomain, tuple(b.values[x] for x in a.values))


def fin_identity(n: int) -> FinMorphism:
    return FinMorphism(n, n, tuple(range(n + 1)))


def pointed_maps(n: int, k: int) -> list[FinMorphism]:
    return [FinMorphism(n, k, (0,) + v) for v in iproduct(range(k + 1), repeat=n)]


# ---------------------------------------------------------------------------
# the total category


@dataclass(frozen=True, eq=False)
class TotalMorphism:
    source: tuple
    target: tuple
    base: object
    comps: tuple

    def __post_init__(self):
        key = (self.source, self.target, self.base.values, self.comps)
        object.__setattr__(self, "_key", key)
        object.__setattr__(self, "_hash", hash(key))

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        if not isinstance(other, TotalMorphism):
            return NotImplemented
        return self._hash == other._hash and self._key == other._key

    def render(self, M) -> str:
        comps = ", ".join(M.render(f) for f in self.comps)
        return f"{_render_obj(self.source)} -> {_render_obj(self.target)} over {self.base}: [{comps}]"


def _render_obj(c: tuple) -> str:
    return "(" + ",".join(map(str, c)) + ")"


class OpfibTotal:
    """``M^(x)`` truncated at ``nmax`` over ``Delta^op`` (``base_kind="delta_op"``)
    or over ``Fin`` (``base_kind="fin"``).

    A morphism ``(M_1..M_n) -> (L_1..L_k)`` over ``a`` has one component per
    target slot ``i``, from the left-normalized tensor of the block of ``a``
    at ``i`` (the unit for an empty block) to ``L_i``.  Over ``Fin`` the
    blocks are the preimages in increasing order.

    ``objects`` restricts the letters ``M_j`` to a subset of objects of
    ``M`` closed under the tensor and containing the unit.  With
    ``require_closed=False`` that is not enforced; composition still works
    but lifts and hom enumerations may leave the letter set.
    """

    def __init__(
        self,
        M,
        nmax: int = 3,
        base_kind: str = "delta_op",
        objects: Sequence | None = None,
        budget: Budget | None = None,
        require_closed: bool = True,
    ):
        if base_kind not in ("delta_op", "fin"):
            raise ValueError(f"unknown base kind {base_kind!r}")
        if base_kind == "fin" and not getattr(M, "symmetric", False):
            raise PreconditionError("the Fin encoding needs a braiding")
        self.M = M
        self.nmax = nmax
        self.base_kind = base_kind
        self.letters = tuple(objects if objects is not None else M.category.objects)
        self.budget = budget
        if require_closed:
            letters = set(self.letters)
            if M.unit not in letters:
                raise PreconditionError(f"unit {M.unit} not among the objects")
            for A, B in iproduct(self.letters, self.letters):
                if M.tensor(A, B) not in letters:
                    raise PreconditionError(f"objects not closed under tensor: {A}*{B}")
        self._connectors: dict = {}
        self._compose_cache: dict = {}
        self._homs: dict = {}
        self._outs: dict = {}
        self._then: dict = {}
        self._blocks: dict = {}

    # base --------------------------------------------------------------
    def base_arrows(self, n: int, k: int) -> list:
        """Base arrows from level ``n`` to level ``k`` (total-category direction)."""
        if self.base_kind == "delta_op":
            return monotone_maps(k, n)
        return pointed_maps(n, k)

    def base_ends(self, a) -> tuple[int, int]:
        if self.base_kind == "delta_op":
            return a.codomain, a.domain
        return a.domain, a.codomain

    def base_then(self, a, b):
        """The base composite ``a`` followed by ``b``."""
        key = (a, b)
        hit = self._then.get(key)
        if hit is None:
            hit = delta_compose(a, b) if self.base_kind == "delta_op" else fin_compose(b, a)
            self._then[key] = hit
        return hit

    def base_identity(self, n: int):
        return delta_identity(n) if self.base_kind == "delta_op" else fin_identity(n)

    def blocks(self, a) -> list[tuple]:
        """Source positions (1-based) feeding each target slot."""
        hit = self._blocks.get(a)
        if hit is None:
            v = a.values
            if self.base_kind == "delta_op":
                hit = [tuple(range(v[i - 1] + 1, v[i] + 1)) for i in range(1, len(v))]
            else:
                hit = [tuple(j for j in range(1, a.domain + 1) if v[j] == i) for i in range(1, a.codomain + 1)]
            self._blocks[a] = hit
        return hit

    def is_identity_base(self, a) -> bool:
        n, k = self.base_ends(a)
        return n == k and a == self.base_identity(n)

    # objects and morphisms ---------------------------------------------
    def objects_over(self, n: int) -> list[tuple]:
        return list(iproduct(self.letters, repeat=n))

    def objects(self) -> list[tuple]:
        return [c for n in range(self.nmax + 1) for c in self.objects_over(n)]

    def has_object(self, c: tuple) -> bool:
        return len(c) <= self.nmax and all(x in self.letters for x in c)

    def block_source(self, c: tuple, block: tuple):
        return left_normal_object(self.M, [c[j - 1] for j in block])

    def hom_over(self, c1: tuple, a, c2: tuple) -> list[TotalMorphism]:
        key = (c1, a, c2)
        if key not in self._homs:
            n, k = self.base_ends(a)
            if len(c1) != n or len(c2) != k:
                raise ValueError("objects do not lie over the ends of the base arrow")
            C = self.M.category
            choices = [C.hom(self.block_source(c1, b), L) for b, L in zip(self.blocks(a), c2)]
            out = [TotalMorphism(c1, c2, a, comps) for comps in iproduct(*choices)]
            tick(self.budget, len(out) + 1)
            self._homs[key] = out
        return self._homs[key]

    def out_over(self, c1: tuple, a) -> list[TotalMorphism]:
        key = (c1, a)
        if key not in self._outs:
            C = self.M.category
            slots = []
            for b in self.blocks(a):
                src = self.block_source(c1, b)
                slots.append([(L, f) for L in self.letters for f in C.hom(src, L)])
            out = []
            for choice in iproduct(*slots):
                c2 = tuple(L for L, _ in choice)
                if self.has_object(c2):
                    out.append(TotalMorphism(c1, c2, a, tuple(f for _, f in choice)))
            tick(self.budget, len(out) + 1)
            self._outs[key] = out
        return self._outs[key]

    def out_of(self, c1: tuple) -> Iterator[TotalMorphism]:
        for k in range(self.nmax + 1):
            for a in self.base_arrows(len(c1), k):
                yield from self.out_over(c1, a)

    def morphisms(self) -> Iterator[TotalMorphism]:
        for c in self.objects():
            yield from self.out_of(c)

    def fiber_morphisms(self, n: int) -> Iterator[TotalMorphism]:
        ida = self.base_identity(n)
        for c1 in self.objects_over(n):
            yield from self.out_over(c1, ida)

    def identity(self, c: tuple) -> TotalMorphism:
        M = self.M
        return TotalMorphism(c, c, self.base_identity(len(c)), tuple(M.id(x) for x in c))

    def canonical_lift(self, c: tuple, a) -> TotalMorphism:
        """Identity components onto the left-normalized block tensors."""
        M = self.M
        tgt = tuple(self.block_source(c, b) for b in self.blocks(a))
        return TotalMorphism(c, tgt, a, tuple(M.id(x) for x in tgt))

    # composition ---------------------------------------------------------
    def _connector(self, c1: tuple, a, b) -> list:
        """Per target slot of ``b``: ``N(sorted block) -> (x)_i N(block_i)``."""
        key = (c1, a, b)
        if key in self._connectors:
            return self._connectors[key]
        M = self.M
        ab = self.base_then(a, b)
        inner = self.blocks(a)
        out = []
        for slot, outer in enumerate(self.blocks(b)):
            words = [left_normal([c1[j - 1] for j in inner[i - 1]]) for i in outer]
            nested = UNIT_WORD if not words else words[0]
            for w in words[1:]:
                nested = t(nested, w)
            P = [j for i in outer for j in inner[i - 1]]
            S = list(self.blocks(ab)[slot])
            flat = left_normal([c1[j - 1] for j in P])
            conn = coherence_iso(M, flat, nested)
            if P != S:
                order = [S.index(p) for p in P]
                conn = M.compose(conn, permutation_iso(M, [c1[j - 1] for j in S], order))
            out.append(conn)
        self._connectors[key] = out
        return out

    def compose(self, g: TotalMorphism, f: TotalMorphism) -> TotalMorphism:
        """``g o f``."""
        key = (g, f)
        hit = self._compose_cache.get(key)
        if hit is not None:
            return hit
        if f.target != g.source:
            raise ValueError("morphisms are not composable")
        M = self.M
        conns = self._connector(f.source, f.base, g.base)
        comps = []
        for gl, outer, conn in zip(g.comps, self.blocks(g.base), conns):
            mid = tensor_all(M, [f.comps[i - 1] for i in outer])
            comps.append(M.compose(gl, mid, conn))
        h = TotalMorphism(f.source, g.target, self.base_then(f.base, g.base), tuple(comps))
        self._compose_cache[key] = h
        return h

    def full_subcategory(self, keep: Callable[[tuple], bool]) -> "OpfibTotal":
        """The full subcategory on the objects satisfying ``keep``."""
        return _FullSub(self, keep)


class _FullSub(OpfibTotal):
    def __init__(self, parent: OpfibTotal, keep):
        self.__dict__.update(parent.__dict__)
        self._keep = keep
        self._homs = {}
        self._outs = {}
        self._compose_cache = {}

    def objects_over(self, n: int) -> list[tuple]:
        return [c for c in super().objects_over(n) if self._keep(c)]

    def has_object(self, c: tuple) -> bool:
        return super().has_object(c) and self._keep(c)


def build_opfib_delta(M, nmax: int = 3, objects: Sequence | None = None, budget: Budget | None = None, validate: bool = True) -> OpfibTotal:
    if validate:
        rep = validate_monoidal(M, objects, budget, limit=1)
        if not rep.ok:
            raise PreconditionError("presentation is not monoidal: " + "; ".join(rep.lines()))
    return OpfibTotal(M, nmax, "delta_op", objects, budget)


# ---------------------------------------------------------------------------
# category checks


def check_associativity(p: OpfibTotal, levels: int | None = None, budget: Budget | None = None) -> Verdict:
    """``h o (g o f) == (h o g) o f`` on every composable triple over levels ``<= levels``."""
    top = p.nmax if levels is None else levels
    outs = {c: list(_out_up_to(p, c, top)) for n in range(top + 1) for c in p.objects_over(n)}
    compose = p.compose
    count = 0
    for c1, fs in outs.items():
        for f in fs:
            for g in outs[f.target]:
                gf = compose(g, f)
                hs = outs[g.target]
                tick(budget, len(hs))
                count += len(hs)
                for h in hs:
                    if compose(h, gf) != compose(compose(h, g), f):
                        return Verdict(False, (f, g, h), "composition not associative", top)
    return Verdict(True, None, f"{count} triples", top, {"triples": count})


def _out_up_to(p: OpfibTotal, c: tuple, top: int) -> Iterator[TotalMorphism]:
    for k in range(top + 1):
        for a in p.base_arrows(len(c), k):
            yield from p.out_over(c, a)


def check_unital(p: OpfibTotal) -> Verdict:
    for f in p.morphisms():
        if p.compose(p.identity(f.target), f) != f or p.compose(f, p.identity(f.source)) != f:
            return Verdict(False, f, "identity law fails")
    return Verdict(True)


def fiber_counts(p: OpfibTotal, n: int) -> tuple[int, int]:
    """``(objects, morphisms)`` of the fiber over level ``n``."""
    objs = p.objects_over(n)
    return len(objs), sum(1 for _ in p.fiber_morphisms(n))


# ---------------------------------------------------------------------------
# coCartesian arrows


@dataclass
class CocartesianFailure:
    target: tuple  # c3
    base: object  # beta
    kind: str  # "not surjective" | "not injective"
    morphisms: tuple

    def render(self, p: OpfibTotal) -> str:
        ms = "; ".join(m.render(p.M) for m in self.morphisms)
        return f"{self.kind} at c3={_render_obj(self.target)}, beta={self.base}: {ms}"


def is_cocartesian(p: OpfibTotal, f: TotalMorphism, budget: Budget | None = None) -> Verdict:
    """``g |-> g o f`` is a bijection ``Hom_b(c2, c3) -> Hom_{b a}(c1, c3)`` for all ``b, c3``."""
    c1, c2 = f.source, f.target
    for m in range(p.nmax + 1):
        for b in p.base_arrows(len(c2), m):
            ba = p.base_then(f.base, b)
            seen: dict = {}
            gs = p.out_over(c2, b)
            tick(budget, len(gs) + 1)
            for g in gs:
                h = p.compose(g, f)
                if h in seen:
                    return Verdict(False, CocartesianFailure(g.target, b, "not injective", (seen[h], g)))
                seen[h] = g
            for h in p.out_over(c1, ba):
                if h not in seen:
                    return Verdict(False, CocartesianFailure(h.target, b, "not surjective", (h,)))
    return Verdict(True)


def cocartesian_lifts(p: OpfibTotal, c: tuple, a, budget: Budget | None = None) -> list[TotalMorphism]:
    return [f for f in p.out_over(c, a) if is_cocartesian(p, f, budget)]


def check_opfibration(p: OpfibTotal, search_all: bool = True, budget: Budget | None = None) -> Verdict:
    """Every object has a coCartesian lift of every base arrow out of its level."""
    checked = 0
    for c in p.objects():
        for k in range(p.nmax + 1):
            for a in p.base_arrows(len(c), k):
                checked += 1
                lift = None
                cand = p.canonical_lift(c, a)
                if p.has_object(cand.target) and is_cocartesian(p, cand, budget):
                    lift = cand
                if lift is None and search_all:
                    found = cocartesian_lifts(p, c, a, budget)
                    lift = found[0] if found else None
                if lift is None:
                    return Verdict(False, (c, a), f"no coCartesian lift of {a} at {_render_obj(c)}")
    return Verdict(True, None, f"{checked} lifts", extra={"lifts": checked})


def factor_through(p: OpfibTotal, f: TotalMorphism, h: TotalMorphism, b=None) -> TotalMorphism | None:
    """The unique ``g`` over ``b`` (default: fiberwise) with ``g o f == h``."""
    if b is None:
        b = p.base_identity(len(h.target))
    hits = [g for g in p.hom_over(f.target, b, h.target) if p.compose(g, f) == h]
    if len(hits) > 1:
        raise PreconditionError("factorization is not unique: the arrow is not coCartesian")
    return hits[0] if hits else None


def check_lift_uniqueness(p: OpfibTotal, budget: Budget | None = None) -> Verdict:
    """Any two coCartesian lifts of a base arrow differ by a unique fiber isomorphism."""
    for c in p.objects():
        for k in range(p.nmax + 1):
            for a in p.base_arrows(len(c), k):
                lifts = cocartesian_lifts(p, c, a, budget)
                if not lifts:
                    return Verdict(False, (c, a), "no lift")
                first = lifts[0]
                for other in lifts[1:]:
                    phi = factor_through(p, first, other)
                    if phi is None or not _fiber_iso(p, phi):
                        return Verdict(False, (first, other), "lifts not related by a fiber isomorphism")
    return Verdict(True)


def _fiber_iso(p: OpfibTotal, f: TotalMorphism) -> bool:
    return p.is_identity_base(f.base) and all(p.M.category.is_iso(x) for x in f.comps)


def fiber_inverse(p: OpfibTotal, f: TotalMorphism) -> TotalMorphism:
    M = p.M
    return TotalMorphism(f.target, f.source, f.base, tuple(M.inv(x) for x in f.comps))


# ---------------------------------------------------------------------------
# pushforwards


@dataclass
class FiberFunctor:
    base: object
    on_objects: dict
    on_morphisms: dict

    def __call__(self, x):
        return self.on_morphisms[x] if isinstance(x, TotalMorphism) else self.on_objects[x]


def pushforward(p: OpfibTotal, a) -> FiberFunctor:
    """``a_!`` on the fiber over the source level, built from canonical lifts."""
    n, _ = p.base_ends(a)
    obj = {c: p.canonical_lift(c, a).target for c in p.objects_over(n)}
    mor = {}
    for u in p.fiber_morphisms(n):
        h = p.compose(p.canonical_lift(u.target, a), u)
        g = factor_through(p, p.canonical_lift(u.source, a), h)
        if g is None:
            raise PreconditionError(f"canonical lift at {_render_obj(u.source)} is not coCartesian")
        mor[u] = g
    return FiberFunctor(a, obj, mor)


@dataclass
class NaturalIso:
    components: dict  # object -> fiber morphism
    natural: bool
    invertible: bool


def connecting_iso(p: OpfibTotal, c: tuple, a, b) -> TotalMorphism:
    """The fiber map ``phi`` with ``phi o lift_{ba}(c) == lift_b(a_! c) o lift_a(c)``."""
    la = p.canonical_lift(c, a)
    lb = p.canonical_lift(la.target, b)
    lab = p.canonical_lift(c, p.base_then(a, b))
    phi = factor_through(p, lab, p.compose(lb, la))
    if phi is None:
        raise PreconditionError("composite lift does not factor")
    return phi


def compose_pushforwards(p: OpfibTotal, a, b) -> NaturalIso:
    """``(b a)_! => b_! a_!`` with verified invertibility and naturality."""
    n, _ = p.base_ends(a)
    comps = {c: connecting_iso(p, c, a, b) for c in p.objects_over(n)}
    pa, pb, pab = pushforward(p, a), pushforward(p, b), pushforward(p, p.base_then(a, b))
    natural = True
    for u in p.fiber_morphisms(n):
        lhs = p.compose(pb(pa(u)), comps[u.source])
        rhs = p.compose(comps[u.target], pab(u))
        if lhs != rhs:
            natural = False
            break
    invertible = all(_fiber_iso(p, phi) for phi in comps.values())
    return NaturalIso(comps, natural, invertible)


# ---------------------------------------------------------------------------
# extraction


D1 = DeltaMorphism(1, 2, (0, 2))
UNIT_ARROW = DeltaMorphism(1, 0, (0, 0))


@dataclass
class Extraction:
    presentation: MonoidalPresentation
    report: object
    isomorphic: bool
    mismatches: list = field(default_factory=list)


def extract_tensor(p: OpfibTotal, original=None) -> Extraction:
    """Read ``(x)``, ``I``, ``alpha``, ``lambda``, ``rho`` off the canonical lifts
    over ``Delta^op`` and compare with ``original`` (identity on objects)."""
    if p.base_kind != "delta_op":
        raise ValueError("extract_tensor expects the Delta^op encoding")
    if p.nmax < 3:
        raise PreconditionError("extraction needs nmax >= 3")
    _check_fiber_powers(p)
    M = p.M
    C = M.category
    objs = list(p.letters)
    mors1 = [f for a in objs for b in objs for f in C.hom(a, b)]
    ten = pushforward(p, D1)
    unit = p.canonical_lift((), UNIT_ARROW).target[0]
    tensor_obj = {(A, B): ten((A, B))[0] for A in objs for B in objs}
    tensor_mor = {}
    for f, g in iproduct(mors1, mors1):
        u = TotalMorphism((C.source(f), C.source(g)), (C.target(f), C.target(g)), delta_identity(2), (f, g))
        tensor_mor[(f, g)] = ten(u).comps[0]
    s0 = DeltaMorphism(2, 1, (0, 0, 1))
    s1 = DeltaMorphism(2, 1, (0, 1, 1))
    lam = {A: M.inv(connecting_iso(p, (A,), s0, D1).comps[0]) for A in objs}
    rho = {A: M.inv(connecting_iso(p, (A,), s1, D1).comps[0]) for A in objs}
    first = DeltaMorphism(2, 3, (0, 2, 3))  # merge slots 1,2
    second = DeltaMorphism(2, 3, (0, 1, 3))  # merge slots 2,3
    assoc = {}
    for A, B, D in iproduct(objs, objs, objs):
        c = (A, B, D)
        left = connecting_iso(p, c, first, D1).comps[0]
        right = connecting_iso(p, c, second, D1).comps[0]
        assoc[(A, B, D)] = M.compose(right, M.inv(left))
    E = MonoidalPresentation(
        C if objects_all(p) else _Restricted(C, objs), tensor_obj, tensor_mor, unit, assoc, lam, rho,
        name=f"extract({M.name})",
    )
    report = validate_monoidal(E, objs)
    mismatches = compare_presentations(E, original, objs) if original is not None else []
    return Extraction(E, report, report.ok and not mismatches and original is not None, mismatches)


def objects_all(p: OpfibTotal) -> bool:
    return tuple(p.letters) == tuple(p.M.category.objects)


class _Restricted:
    """A category restricted (for enumeration) to a subset of objects."""

    def __init__(self, C, objs):
        self._C = C
        self.objects = tuple(objs)

    def __getattr__(self, name):
        return getattr(self._C, name)

    @property
    def morphisms(self):
        return [f for a in self.objects for b in self.objects for f in self._C.hom(a, b)]


def compare_presentations(E, M, objs: Sequence) -> list[str]:
    """Identity-on-objects comparison of all structure data."""
    out = []
    C = M.category
    mors = [f for a in objs for b in objs for f in C.hom(a, b)]
    if E.unit != M.unit:
        out.append(f"unit {E.unit} != {M.unit}")
    for A, B in iproduct(objs, objs):
        if E.tensor(A, B) != M.tensor(A, B):
            out.append(f"tensor_obj {A},{B}")
    for f, g in iproduct(mors, mors):
        if E.tensor_m(f, g) != M.tensor_m(f, g):
            out.append(f"tensor_mor {M.render(f)},{M.render(g)}")
    for A, B, D in iproduct(objs, objs, objs):
        if E.alpha(A, B, D) != M.alpha(A, B, D):
            out.append(f"associator {A},{B},{D}")
    for A in objs:
        if E.lam(A) != M.lam(A):
            out.append(f"left unitor {A}")
        if E.rho(A) != M.rho(A):
            out.append(f"right unitor {A}")
    if getattr(E, "symmetric", False) and getattr(M, "symmetric", False):
        for A, B in iproduct(objs, objs):
            if E.sigma(A, B) != M.sigma(A, B):
                out.append(f"braiding {A},{B}")
    return out


def alpha_jn(j: int, n: int) -> FinMorphism:
    """``<n>_* -> <1>_*`` sending ``j`` to ``1`` and everything else to the base point."""
    if not 1 <= j <= n:
        raise ValueError(f"need 1 <= j <= n, got j={j}, n={n}")
    return FinMorphism(n, 1, (0,) + tuple(int(x == j) for x in range(1, n + 1)))


def inert(p: OpfibTotal, i: int, n: int):
    """The base arrow from level ``n`` to level ``1`` picking out slot ``i``."""
    return iota(i, n) if p.base_kind == "delta_op" else alpha_jn(i, n)


def check_fiber_powers(p: OpfibTotal) -> Verdict:
    """The inert pushforwards identify the fiber over ``n`` with ``M^n``
    (bijective on objects and on hom-sets)."""
    C = p.M.category
    for n in range(p.nmax + 1):
        pushes = [pushforward(p, inert(p, i, n)) for i in range(1, n + 1)]
        objs = p.objects_over(n)
        images = {tuple(P(c)[0] for P in pushes): c for c in objs}
        if len(images) != len(objs) or len(objs) != len(p.letters) ** n:
            return Verdict(False, n, "not bijective on objects")
        for c1 in objs:
            for c2 in objs:
                ms = p.hom_over(c1, p.base_identity(n), c2)
                imgs = {tuple(P(u).comps[0] for P in pushes) for u in ms}
                want = 1
                for a, b in zip(c1, c2):
                    want *= len(C.hom(a, b))
                if len(imgs) != len(ms) or len(ms) != want:
                    return Verdict(False, (n, c1, c2), "not bijective on morphisms")
    return Verdict(True)


def _check_fiber_powers(p: OpfibTotal) -> None:
    v = check_fiber_powers(p)
    if not v:
        raise PreconditionError(f"fiber is not a power of M: {v.detail} at {v.witness}")


# ---------------------------------------------------------------------------
# algebra objects as sections


@dataclass
class AlgebraSection:
    p: OpfibTotal
    on_objects: dict  # level -> object
    on_morphisms: dict  # base arrow -> TotalMorphism

    def __call__(self, a) -> TotalMorphism:
        return self.on_morphisms[a]


def iterated_product(M, A, mu, eta, b: int):
    """``A^(x)b -> A`` (left-normalized source)."""
    if b == 0:
        return eta
    if b == 1:
        return M.id(A)
    out = mu
    for _ in range(b - 2):
        out = M.compose(mu, M.tensor_m(out, M.id(A)))
    return out


def _section(p: OpfibTotal, A, mu, eta) -> AlgebraSection:
    M = p.M
    objs = {n: (A,) * n for n in range(p.nmax + 1)}
    mors = {}
    for n in range(p.nmax + 1):
        for k in range(p.nmax + 1):
            for a in p.base_arrows(n, k):
                comps = tuple(iterated_product(M, A, mu, eta, len(bl)) for bl in p.blocks(a))
                mors[a] = TotalMorphism(objs[n], objs[k], a, comps)
    return AlgebraSection(p, objs, mors)


def section_from_monoid(p: OpfibTotal, A, mu, eta, check: bool = True) -> AlgebraSection:
    if check:
        bad = is_monoid(p.M, A, mu, eta)
        if bad:
            raise PreconditionError("not a monoid: " + "; ".join(bad))
    return _section(p, A, mu, eta)


@dataclass
class MonoidReading:
    A: object
    mu: object
    eta: object
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures


def monoid_from_section(S: AlgebraSection) -> MonoidReading:
    p = S.p
    if p.base_kind == "delta_op":
        m, u = D1, UNIT_ARROW
    else:
        m, u = FinMorphism(2, 1, (0, 1, 1)), FinMorphism(0, 1, (0,))
    A = S.on_objects[1][0]
    mu = S(m).comps[0]
    eta = S(u).comps[0]
    return MonoidReading(A, mu, eta, is_monoid(p.M, A, mu, eta))


def check_section(S: AlgebraSection, special: Callable, budget: Budget | None = None) -> Verdict:
    """Projection, functoriality, and ``special`` base arrows to coCartesian morphisms."""
    p = S.p
    arrows = list(S.on_morphisms)
    for a in arrows:
        f = S(a)
        n, k = p.base_ends(a)
        if f.base != a or f.source != S.on_objects[n] or f.target != S.on_objects[k]:
            return Verdict(False, a, "section does not lie over the base")
    for n in range(p.nmax + 1):
        ida = p.base_identity(n)
        if S(ida) != p.identity(S.on_objects[n]):
            return Verdict(False, ida, "identities not preserved")
    for a in arrows:
        _, k = p.base_ends(a)
        for m in range(p.nmax + 1):
            for b in p.base_arrows(k, m):
                tick(budget)
                if p.compose(S(b), S(a)) != S(p.base_then(a, b)):
                    return Verdict(False, (a, b), "not functorial")
    for a in arrows:
        if special(a) and not is_cocartesian(p, S(a), budget):
            return Verdict(False, a, "special arrow not sent to a coCartesian morphism")
    return Verdict(True)


def check_algebra_section(S: AlgebraSection, budget: Budget | None = None) -> Verdict:
    """Functorial section sending convex arrows to coCartesian morphisms."""
    return check_section(S, is_convex, budget)


def is_initial_algebra(S: AlgebraSection) -> bool:
    """The unit-level map ``I -> A_[1]`` is an isomorphism."""
    return S.p.M.category.is_iso(monoid_from_section(S).eta)
