"""Fin, the comparison functor phi, commutative algebra sections, and dual pairs."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from typing import Sequence

from ._common import Budget, PreconditionError, Verdict
from .monoidal import (
    SymmetricMonoidalPresentation,
    coherence_iso,
    forget_braiding,
    is_commutative_monoid,
    parse_word,
    validate_symmetric,
)
from .opfib import (
    AlgebraSection,
    DeltaMorphism,
    Extraction,
    FinMorphism,
    OpfibTotal,
    TotalMorphism,
    _check_fiber_powers,
    _Restricted,
    _section,
    check_section,
    compare_presentations,
    connecting_iso,
    delta_compose,
    fin_compose,
    fin_identity,
    is_convex,
    monotone_maps,
    objects_all,
    pushforward,
)

FOLD = FinMorphism(2, 1, (0, 1, 1))  # m
TWIST = FinMorphism(2, 2, (0, 2, 1))  # t
UNIT_FIN = FinMorphism(0, 1, (0,))  # u
IOTA1 = FinMorphism(1, 2, (0, 1))
IOTA2 = FinMorphism(1, 2, (0, 2))


def is_collapsing(a: FinMorphism) -> bool:
    """Every non-base point of the target has exactly one preimage."""
    counts = [0] * (a.codomain + 1)
    for x in a.values[1:]:
        counts[x] += 1
    return all(c == 1 for c in counts[1:])


def phi(a: DeltaMorphism) -> FinMorphism:
    """``[k] -> [n]`` monotone to ``<n>_* -> <k>_*``: ``j |-> i`` iff ``a(i-1) < j <= a(i)``."""
    n, k = a.codomain, a.domain
    vals = [0] * (n + 1)
    for i in range(1, k + 1):
        for j in range(a.values[i - 1] + 1, a.values[i] + 1):
            vals[j] = i
    return FinMorphism(n, k, tuple(vals))


@dataclass
class ExhaustiveReport:
    checked: int
    failures: list

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok


def collapsing_convex_check(nmax: int) -> ExhaustiveReport:
    """``is_collapsing(phi(a)) == is_convex(a)`` for all monotone ``[k] -> [n]``, ``n, k <= nmax``."""
    failures, count = [], 0
    for n in range(nmax + 1):
        for k in range(nmax + 1):
            for a in monotone_maps(k, n):
                count += 1
                if is_collapsing(phi(a)) != is_convex(a):
                    failures.append(a)
    return ExhaustiveReport(count, failures)


def phi_functoriality_check(nmax: int) -> ExhaustiveReport:
    """``phi(a o b) == phi(b) o phi(a)`` and ``phi(id) == id`` up to ``nmax``."""
    failures, count = [], 0
    for n in range(nmax + 1):
        if phi(DeltaMorphism(n, n, tuple(range(n + 1)))) != fin_identity(n):
            failures.append(("identity", n))
        for k in range(nmax + 1):
            for m in range(nmax + 1):
                for a in monotone_maps(k, n):
                    for b in monotone_maps(m, k):
                        count += 1
                        if phi(delta_compose(a, b)) != fin_compose(phi(b), phi(a)):
                            failures.append((a, b))
    return ExhaustiveReport(count, failures)


# ---------------------------------------------------------------------------
# the Fin encoding


def build_opfib_fin(M, nmax: int = 3, objects: Sequence | None = None, budget: Budget | None = None, validate: bool = True) -> OpfibTotal:
    if validate:
        rep = validate_symmetric(M, objects, budget, limit=1)
        if not rep.ok:
            raise PreconditionError("presentation is not symmetric monoidal: " + "; ".join(rep.lines()))
    return OpfibTotal(M, nmax, "fin", objects, budget)


def extract_symmetric(p: OpfibTotal, original=None) -> Extraction:
    """Tensor from the fold, unit from ``u``, unitors from ``m o iota_i = id``,
    braiding from ``m o t = m``, associator from the two ways of folding three slots."""
    if p.base_kind != "fin":
        raise ValueError("extract_symmetric expects the Fin encoding")
    if p.nmax < 3:
        raise PreconditionError("extraction needs nmax >= 3")
    _check_fiber_powers(p)
    M = p.M
    C = M.category
    objs = list(p.letters)
    mors1 = [f for a in objs for b in objs for f in C.hom(a, b)]
    ten = pushforward(p, FOLD)
    unit = p.canonical_lift((), UNIT_FIN).target[0]
    tensor_obj = {(A, B): ten((A, B))[0] for A in objs for B in objs}
    tensor_mor = {}
    for f, g in iproduct(mors1, mors1):
        u = TotalMorphism((C.source(f), C.source(g)), (C.target(f), C.target(g)), fin_identity(2), (f, g))
        tensor_mor[(f, g)] = ten(u).comps[0]
    lam = {A: M.inv(connecting_iso(p, (A,), IOTA2, FOLD).comps[0]) for A in objs}
    rho = {A: M.inv(connecting_iso(p, (A,), IOTA1, FOLD).comps[0]) for A in objs}
    braid = {(A, B): connecting_iso(p, (A, B), TWIST, FOLD).comps[0] for A in objs for B in objs}
    first = FinMorphism(3, 2, (0, 1, 1, 2))
    second = FinMorphism(3, 2, (0, 1, 2, 2))
    assoc = {}
    for A, B, D in iproduct(objs, objs, objs):
        left = connecting_iso(p, (A, B, D), first, FOLD).comps[0]
        right = connecting_iso(p, (A, B, D), second, FOLD).comps[0]
        assoc[(A, B, D)] = M.compose(right, M.inv(left))
    E = SymmetricMonoidalPresentation(
        C if objects_all(p) else _Restricted(C, objs), tensor_obj, tensor_mor, unit, assoc, lam, rho,
        name=f"extract({M.name})", braiding=braid,
    )
    report = validate_symmetric(E, objs)
    mismatches = compare_presentations(E, original, objs) if original is not None else []
    return Extraction(E, report, report.ok and not mismatches and original is not None, mismatches)


def commutative_section_from_monoid(p: OpfibTotal, A, mu, eta, check: bool = True) -> AlgebraSection:
    if p.base_kind != "fin":
        raise ValueError("commutative sections live over Fin")
    if check:
        bad = is_commutative_monoid(p.M, A, mu, eta)
        if bad:
            raise PreconditionError("not a commutative monoid: " + "; ".join(bad))
    return _section(p, A, mu, eta)


def check_commutative_algebra_section(S: AlgebraSection, budget: Budget | None = None) -> Verdict:
    """Functorial section over Fin sending collapsing arrows to coCartesian morphisms."""
    return check_section(S, is_collapsing, budget)


# ---------------------------------------------------------------------------
# pullback along phi


class PullbackTotal(OpfibTotal):
    """``Delta^op x_Fin p``: a morphism over ``a`` is a morphism of ``p`` over ``phi(a)``."""

    def __init__(self, p: OpfibTotal, nmax: int | None = None):
        if p.base_kind != "fin":
            raise ValueError("pullback along phi needs the Fin encoding")
        super().__init__(p.M, p.nmax if nmax is None else nmax, "delta_op", p.letters, p.budget, require_closed=False)
        self.parent = p

    def up(self, f: TotalMorphism) -> TotalMorphism:
        return TotalMorphism(f.source, f.target, phi(f.base), f.comps)

    def compose(self, g: TotalMorphism, f: TotalMorphism) -> TotalMorphism:
        key = (g, f)
        hit = self._compose_cache.get(key)
        if hit is None:
            h = self.parent.compose(self.up(g), self.up(f))
            hit = TotalMorphism(h.source, h.target, self.base_then(f.base, g.base), h.comps)
            self._compose_cache[key] = hit
        return hit


def underlying_monoidal(p: OpfibTotal, nmax: int | None = None) -> PullbackTotal:
    return PullbackTotal(p, nmax)


def forget_commutative(S: AlgebraSection, q: PullbackTotal | None = None) -> AlgebraSection:
    """Precompose a commutative section with ``phi``."""
    q = q or underlying_monoidal(S.p)
    mors = {}
    for n in range(q.nmax + 1):
        for k in range(q.nmax + 1):
            for a in q.base_arrows(n, k):
                f = S(phi(a))
                mors[a] = TotalMorphism(f.source, f.target, a, f.comps)
    return AlgebraSection(q, {n: S.on_objects[n] for n in range(q.nmax + 1)}, mors)


def compare_with_delta(q: PullbackTotal, M=None, levels: int | None = None) -> Verdict:
    """Same homs and same composition as the direct encoding of the underlying monoidal category."""
    d = OpfibTotal(forget_braiding(q.M) if M is None else M, q.nmax, "delta_op", q.letters, require_closed=False)
    top = q.nmax if levels is None else levels
    for n in range(top + 1):
        for c in q.objects_over(n):
            for k in range(top + 1):
                for a in q.base_arrows(n, k):
                    fs = q.out_over(c, a)
                    if fs != d.out_over(c, a):
                        return Verdict(False, (c, a), "hom sets differ")
                    for f in fs:
                        for m in range(top + 1):
                            for b in q.base_arrows(k, m):
                                for g in q.out_over(f.target, b):
                                    if q.compose(g, f) != d.compose(g, f):
                                        return Verdict(False, (f, g), "composition differs")
    return Verdict(True)


# ---------------------------------------------------------------------------
# duals


@dataclass(frozen=True)
class DualPairWitness:
    X: object
    Y: object
    eta: object  # I -> Y (x) X
    eps: object  # X (x) Y -> I


def _w(text: str, **names) -> tuple:
    W = parse_word(text)

    def sub(V):
        if V[0] == "ob":
            return ("ob", names[V[1]])
        if V[0] == "I":
            return V
        return ("t", sub(V[1]), sub(V[2]))

    return sub(W)


def triangle_composites(M, w: DualPairWitness) -> tuple:
    """``(X -> X, Y -> Y)`` composites of the two triangular identities."""
    X, Y = w.X, w.Y
    idX, idY = M.id(X), M.id(Y)
    t1 = M.compose(
        coherence_iso(M, _w("I*X", X=X), _w("X", X=X)),
        M.tensor_m(w.eps, idX),
        coherence_iso(M, _w("X*(Y*Z)", X=X, Y=Y, Z=X), _w("(X*Y)*Z", X=X, Y=Y, Z=X)),
        M.tensor_m(idX, w.eta),
        coherence_iso(M, _w("X", X=X), _w("X*I", X=X)),
    )
    t2 = M.compose(
        coherence_iso(M, _w("Y*I", Y=Y), _w("Y", Y=Y)),
        M.tensor_m(idY, w.eps),
        coherence_iso(M, _w("(Y*X)*Z", X=X, Y=Y, Z=Y), _w("Y*(X*Z)", X=X, Y=Y, Z=Y)),
        M.tensor_m(w.eta, idY),
        coherence_iso(M, _w("Y", Y=Y), _w("I*Y", Y=Y)),
    )
    return t1, t2


def check_dual_pair(M, w: DualPairWitness) -> Verdict:
    C = M.category
    if (C.source(w.eta), C.target(w.eta)) != (M.unit, M.tensor(w.Y, w.X)):
        return Verdict(False, w, "eta has the wrong type")
    if (C.source(w.eps), C.target(w.eps)) != (M.tensor(w.X, w.Y), M.unit):
        return Verdict(False, w, "eps has the wrong type")
    t1, t2 = triangle_composites(M, w)
    if t1 != M.id(w.X):
        return Verdict(False, w, f"first triangle gives {M.render(t1)}")
    if t2 != M.id(w.Y):
        return Verdict(False, w, f"second triangle gives {M.render(t2)}")
    return Verdict(True, w)


def find_right_dual(M, X, objects: Sequence | None = None, budget: Budget | None = None) -> list[DualPairWitness]:
    """All ``(Y, eta, eps)`` with ``Y`` among ``objects`` making a dual pair."""
    C = M.category
    out = []
    for Y in objects if objects is not None else C.objects:
        etas = C.hom(M.unit, M.tensor(Y, X))
        epss = C.hom(M.tensor(X, Y), M.unit)
        if budget is not None:
            budget.check_size(f"hom(I, {Y}*{X})", len(etas))
            budget.check_size(f"hom({X}*{Y}, I)", len(epss))
        for eta, eps in iproduct(etas, epss):
            w = DualPairWitness(X, Y, eta, eps)
            if check_dual_pair(M, w):
                out.append(w)
    return out


def swap_dual(M, w: DualPairWitness) -> DualPairWitness:
    """``(Y, X)`` with braided unit and counit."""
    return DualPairWitness(
        w.Y, w.X, M.compose(M.sigma(w.Y, w.X), w.eta), M.compose(w.eps, M.sigma(w.Y, w.X))
    )


@dataclass
class DualIso:
    forward: object  # Y1 -> Y2
    backward: object  # Y2 -> Y1
    verified: bool


def _dual_map(M, w1: DualPairWitness, w2: DualPairWitness):
    """``Y1 -> I Y1 -> (Y2 X) Y1 -> Y2 (X Y1) -> Y2 I -> Y2``."""
    Y1, Y2, X = w1.Y, w2.Y, w1.X
    return M.compose(
        coherence_iso(M, _w("Y*I", Y=Y2), _w("Y", Y=Y2)),
        M.tensor_m(M.id(Y2), w1.eps),
        coherence_iso(M, _w("(A*X)*B", A=Y2, X=X, B=Y1), _w("A*(X*B)", A=Y2, X=X, B=Y1)),
        M.tensor_m(w2.eta, M.id(Y1)),
        coherence_iso(M, _w("Y", Y=Y1), _w("I*Y", Y=Y1)),
    )


def duals_canonical_iso(M, w1: DualPairWitness, w2: DualPairWitness) -> DualIso:
    """The canonical comparison between two right duals of the same object."""
    if w1.X != w2.X:
        raise ValueError("witnesses are for different objects")
    f = _dual_map(M, w1, w2)
    g = _dual_map(M, w2, w1)
    ok = M.compose(g, f) == M.id(w1.Y) and M.compose(f, g) == M.id(w2.Y)
    # compatibility with the unit and counit
    ok = ok and M.compose(w2.eps, M.tensor_m(M.id(w1.X), f)) == w1.eps
    ok = ok and M.compose(M.tensor_m(f, M.id(w1.X)), w1.eta) == w2.eta
    return DualIso(f, g, ok)
