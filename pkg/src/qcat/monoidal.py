"""Monoidal presentations, coherence rewriting and a small corpus of examples.

A presentation is anything exposing ``category`` (objects, ``hom``,
``compose(g, f)``, ``identity``, ``source``, ``target``, ``inverse``), the
tensor on objects and morphisms, the unit and the structure isomorphisms.
:class:`MonoidalPresentation` is the table-driven form;
:class:`MatrixPresentation` computes everything on the fly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as iproduct
from typing import Sequence

from ._common import Budget, tick
from .category import FiniteCategory, poset_category


class MonoidalPresentation:
    """Finite category with total tensor tables, unit, associator and unitors."""

    symmetric = False

    def __init__(
        self,
        category: FiniteCategory,
        tensor_obj: dict,
        tensor_mor: dict,
        unit,
        associator: dict,
        left_unitor: dict,
        right_unitor: dict,
        name: str = "",
    ):
        self.category = category
        self.tensor_obj = dict(tensor_obj)
        self.tensor_mor = dict(tensor_mor)
        self.unit = unit
        self.associator = dict(associator)
        self.left_unitor = dict(left_unitor)
        self.right_unitor = dict(right_unitor)
        self.name = name

    @property
    def objects(self):
        return self.category.objects

    def tensor(self, A, B):
        return self.tensor_obj[(A, B)]

    def tensor_m(self, f, g):
        return self.tensor_mor[(f, g)]

    def alpha(self, A, B, C):
        return self.associator[(A, B, C)]

    def lam(self, A):
        return self.left_unitor[A]

    def rho(self, A):
        return self.right_unitor[A]

    def compose(self, *ms):
        """``ms[0] o ms[1] o ...``."""
        out = ms[-1]
        for m in reversed(ms[:-1]):
            out = self.category.compose(m, out)
        return out

    def id(self, A):
        return self.category.identity(A)

    def inv(self, f):
        g = self.category.inverse(f)
        if g is None:
            raise ValueError(f"{self.category.render(f)} is not invertible")
        return g

    def render(self, f) -> str:
        return self.category.render(f)

    def tables(self) -> dict:
        return {
            "tensor_obj": self.tensor_obj,
            "tensor_mor": self.tensor_mor,
            "unit": self.unit,
            "associator": self.associator,
            "left_unitor": self.left_unitor,
            "right_unitor": self.right_unitor,
        }


class SymmetricMonoidalPresentation(MonoidalPresentation):
    symmetric = True

    def __init__(self, *args, braiding: dict, **kw):
        super().__init__(*args, **kw)
        self.braiding = dict(braiding)

    def sigma(self, A, B):
        return self.braiding[(A, B)]

    def tables(self) -> dict:
        out = super().tables()
        out["braiding"] = self.braiding
        return out


def forget_braiding(M: SymmetricMonoidalPresentation) -> MonoidalPresentation:
    return MonoidalPresentation(
        M.category, M.tensor_obj, M.tensor_mor, M.unit, M.associator, M.left_unitor, M.right_unitor, name=M.name
    )


# ---------------------------------------------------------------------------
# matrices over F_2


Matrix = tuple  # (m, n, rows): n x m matrix, a map F_2^m -> F_2^n


def mat(rows: Sequence[Sequence[int]], m: int | None = None) -> Matrix:
    rows = tuple(tuple(int(v) & 1 for v in r) for r in rows)
    cols = len(rows[0]) if rows else (m or 0)
    return (cols, len(rows), rows)


def mat_identity(n: int) -> Matrix:
    return (n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))


def mat_mul(g: Matrix, f: Matrix) -> Matrix:
    """``g o f``."""
    m, k, F = f
    k2, n, G = g
    if k != k2:
        raise ValueError(f"cannot compose {k2}->{n} after {m}->{k}")
    cols = list(zip(*F)) if k else [() for _ in range(m)]
    return (m, n, tuple(tuple(sum(a & b for a, b in zip(row, col)) & 1 for col in cols) for row in G))


def mat_kron(f: Matrix, g: Matrix) -> Matrix:
    m1, n1, F = f
    m2, n2, G = g
    rows = []
    for i in range(n1):
        for k in range(n2):
            rows.append(tuple(F[i][j] & G[k][l] for j in range(m1) for l in range(m2)))
    return (m1 * m2, n1 * n2, tuple(rows))


def mat_inverse(f: Matrix) -> Matrix | None:
    m, n, F = f
    if m != n:
        return None
    A = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(F)]
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c]), None)
        if piv is None:
            return None
        A[c], A[piv] = A[piv], A[c]
        for r in range(n):
            if r != c and A[r][c]:
                A[r] = [x ^ y for x, y in zip(A[r], A[c])]
    return (n, n, tuple(tuple(r[n:]) for r in A))


def shuffle_matrix(a: int, b: int) -> Matrix:
    """``F^a (x) F^b -> F^b (x) F^a``: ``e_i (x) e_j`` goes to ``e_j (x) e_i``."""
    n = a * b
    rows = [[0] * n for _ in range(n)]
    for i in range(a):
        for j in range(b):
            rows[j * a + i][i * b + j] = 1
    return (n, n, tuple(tuple(r) for r in rows))


def render_matrix(f: Matrix) -> str:
    m, n, F = f
    body = "/".join("".join(str(v) for v in r) for r in F) if m and n else "-"
    return f"{m}->{n}:{body}"


class MatrixCategory:
    """Finite-dimensional F_2 vector spaces ``F_2^n``, morphisms are matrices.

    Objects are natural numbers; ``objects`` lists the ones considered for
    exhaustive checks (``0..dmax``), but every natural number is allowed.
    """

    name = "Mat(F2)"

    def __init__(self, dmax: int, budget: Budget | None = None):
        self.objects = tuple(range(dmax + 1))
        self.budget = budget
        self._homs: dict = {}

    def hom(self, a: int, b: int) -> list:
        if (a, b) not in self._homs:
            size = a * b
            if self.budget is not None:
                self.budget.check_size(f"hom({a},{b})", 2**size)
            out = []
            for bits in iproduct((0, 1), repeat=size):
                rows = tuple(tuple(bits[i * a : (i + 1) * a]) for i in range(b))
                out.append((a, b, rows))
            self._homs[(a, b)] = out
        return self._homs[(a, b)]

    @property
    def morphisms(self) -> list:
        return [f for a in self.objects for b in self.objects for f in self.hom(a, b)]

    def identity(self, a: int) -> Matrix:
        return mat_identity(a)

    def compose(self, g: Matrix, f: Matrix) -> Matrix:
        return mat_mul(g, f)

    def source(self, f: Matrix) -> int:
        return f[0]

    def target(self, f: Matrix) -> int:
        return f[1]

    def inverse(self, f: Matrix):
        return mat_inverse(f)

    def is_iso(self, f: Matrix) -> bool:
        return mat_inverse(f) is not None

    def render(self, f: Matrix) -> str:
        return render_matrix(f)


class MatrixPresentation(SymmetricMonoidalPresentation):
    """Kronecker tensor, unit ``1``, identity associator and unitors,
    perfect-shuffle braiding."""

    def __init__(self, dmax: int = 2, budget: Budget | None = None):
        self.category = MatrixCategory(dmax, budget)
        self.unit = 1
        self.name = f"Mat(F2,{dmax})"

    def tensor(self, A, B):
        return A * B

    def tensor_m(self, f, g):
        return mat_kron(f, g)

    def alpha(self, A, B, C):
        return mat_identity(A * B * C)

    def lam(self, A):
        return mat_identity(A)

    def rho(self, A):
        return mat_identity(A)

    def sigma(self, A, B):
        return shuffle_matrix(A, B)

    def inv(self, f):
        g = mat_inverse(f)
        if g is None:
            raise ValueError(f"{render_matrix(f)} is not invertible")
        return g

    def tables(self) -> dict:
        raise TypeError("the matrix presentation is computed, not tabulated")


def matrix_category(q: int = 2, dmax: int = 2, budget: Budget | None = None) -> MatrixPresentation:
    """The symmetric monoidal category of F_2-matrices on objects ``0..dmax``."""
    if q != 2:
        raise ValueError("only q = 2 is supported")
    if dmax > 3:
        raise ValueError("dmax must be at most 3")
    return MatrixPresentation(dmax, budget)


# ---------------------------------------------------------------------------
# words and coherence


Word = tuple  # ("ob", A) | ("I",) | ("t", W1, W2)

UNIT_WORD: Word = ("I",)


def ob(A) -> Word:
    return ("ob", A)


def t(W1: Word, W2: Word) -> Word:
    return ("t", W1, W2)


def letters(W: Word) -> tuple:
    if W[0] == "ob":
        return (W[1],)
    if W[0] == "I":
        return ()
    return letters(W[1]) + letters(W[2])


def left_normal(objs: Sequence) -> Word:
    """``(..((A1 (x) A2) (x) A3)..) (x) An``; the unit word when empty."""
    if not objs:
        return UNIT_WORD
    W = ob(objs[0])
    for A in objs[1:]:
        W = t(W, ob(A))
    return W


def evaluate(M, W: Word):
    if W[0] == "ob":
        return W[1]
    if W[0] == "I":
        return M.unit
    return M.tensor(evaluate(M, W[1]), evaluate(M, W[2]))


def left_normal_object(M, objs: Sequence):
    return evaluate(M, left_normal(objs))


def tensor_all(M, ms: Sequence):
    """Left-normalized tensor of morphisms; ``id_I`` when empty."""
    if not ms:
        return M.id(M.unit)
    out = ms[0]
    for f in ms[1:]:
        out = M.tensor_m(out, f)
    return out


def parse_word(text: str) -> Word:
    """Parse ``(A*B)*I`` style words; ``I`` is the unit, ``*`` the tensor."""
    tokens = []
    buf = ""
    for ch in text:
        if ch in "()*":
            if buf.strip():
                tokens.append(buf.strip())
            buf = ""
            tokens.append(ch)
        else:
            buf += ch
    if buf.strip():
        tokens.append(buf.strip())
    pos = 0

    def atom():
        nonlocal pos
        if pos >= len(tokens):
            raise ValueError(f"unexpected end of word {text!r}")
        tok = tokens[pos]
        pos += 1
        if tok == "(":
            w = expr()
            if pos >= len(tokens) or tokens[pos] != ")":
                raise ValueError(f"unbalanced parentheses in {text!r}")
            pos += 1
            return w
        if tok in ")*":
            raise ValueError(f"unexpected {tok!r} in {text!r}")
        return UNIT_WORD if tok == "I" else ob(tok)

    def expr():
        nonlocal pos
        w = atom()
        while pos < len(tokens) and tokens[pos] == "*":
            pos += 1
            w = t(w, atom())
        return w

    w = expr()
    if pos != len(tokens):
        raise ValueError(f"trailing input in {text!r}")
    return w


def render_word(W: Word) -> str:
    if W[0] == "ob":
        return str(W[1])
    if W[0] == "I":
        return "I"
    return f"({render_word(W[1])}*{render_word(W[2])})"


def _merge(M, l1: tuple, l2: tuple):
    """``N(l1) (x) N(l2) -> N(l1 + l2)`` for left-normal words ``N``."""
    if not l2:
        return M.rho(left_normal_object(M, l1))
    if not l1:
        return M.lam(left_normal_object(M, l2))
    if len(l2) == 1:
        return M.id(left_normal_object(M, l1 + l2))
    A = left_normal_object(M, l1)
    B = left_normal_object(M, l2[:-1])
    C = l2[-1]
    step = M.inv(M.alpha(A, B, C))
    return M.compose(M.tensor_m(_merge(M, l1, l2[:-1]), M.id(C)), step)


def canonical_map(M, W: Word):
    """The rewrite ``W -> left_normal(letters(W))`` through ``alpha^-1``, ``lambda``, ``rho``."""
    if W[0] == "ob":
        return M.id(W[1])
    if W[0] == "I":
        return M.id(M.unit)
    l1, l2 = letters(W[1]), letters(W[2])
    inner = M.tensor_m(canonical_map(M, W[1]), canonical_map(M, W[2]))
    return M.compose(_merge(M, l1, l2), inner)


def coherence_iso(M, source: Word, target: Word):
    """The canonical isomorphism between two bracketings of the same letters."""
    if letters(source) != letters(target):
        raise ValueError(
            f"letter sequences differ: {render_word(source)} vs {render_word(target)}"
        )
    return M.compose(M.inv(canonical_map(M, target)), canonical_map(M, source))


def _steps(M, W: Word):
    """One-step rewrites toward left-normal form: ``(W', morphism W -> W')``."""
    out = []
    if W[0] != "t":
        return out
    a, b = W[1], W[2]
    if b[0] == "t":
        A, B, C = evaluate(M, a), evaluate(M, b[1]), evaluate(M, b[2])
        out.append((t(t(a, b[1]), b[2]), M.inv(M.alpha(A, B, C))))
    if b[0] == "I":
        out.append((a, M.rho(evaluate(M, a))))
    if a[0] == "I":
        out.append((b, M.lam(evaluate(M, b))))
    for a2, f in _steps(M, a):
        out.append((t(a2, b), M.tensor_m(f, M.id(evaluate(M, b)))))
    for b2, g in _steps(M, b):
        out.append((t(a, b2), M.tensor_m(M.id(evaluate(M, a)), g)))
    return out


@dataclass
class CoherenceCheck:
    ok: bool
    word: Word
    composites: list = field(default_factory=list)


def check_rewrite_paths(M, W: Word) -> CoherenceCheck:
    """Every maximal rewrite path from ``W`` yields the same composite."""
    memo: dict = {}

    def results(V):
        if V in memo:
            return memo[V]
        steps = _steps(M, V)
        if not steps:
            memo[V] = {M.id(evaluate(M, V))}
            return memo[V]
        out = set()
        for V2, f in steps:
            for c in results(V2):
                out.add(M.compose(c, f))
        memo[V] = out
        return out

    res = results(W)
    return CoherenceCheck(len(res) == 1, W, sorted(res, key=repr))


def all_words(objs: Sequence, with_units: int = 0) -> list[Word]:
    """All bracketings of ``objs`` with up to ``with_units`` unit letters inserted."""

    @lru_cache(maxsize=None)
    def brackets(seq):
        if len(seq) == 1:
            return [seq[0]]
        out = []
        for k in range(1, len(seq)):
            for a in brackets(seq[:k]):
                for b in brackets(seq[k:]):
                    out.append(t(a, b))
        return out

    seqs = {tuple(ob(A) for A in objs)}
    for _ in range(with_units):
        seqs |= {s[:k] + (UNIT_WORD,) + s[k:] for s in seqs for k in range(len(s) + 1)}
    words = []
    for s in sorted(seqs, key=repr):
        if s:
            words.extend(brackets(s))
    return words


def permutation_iso(M, objs: Sequence, order: Sequence[int], strategy: str = "bubble"):
    """``N(objs) -> N(objs[order])`` built from adjacent braidings.

    ``strategy`` picks the swap sequence (``bubble`` or ``insertion``); both
    must agree in a symmetric monoidal category.
    """
    cur = list(range(len(objs)))
    rank = {j: r for r, j in enumerate(order)}
    swaps = []
    if strategy == "bubble":
        changed = True
        while changed:
            changed = False
            for k in range(len(cur) - 1):
                if rank[cur[k]] > rank[cur[k + 1]]:
                    cur[k], cur[k + 1] = cur[k + 1], cur[k]
                    swaps.append(k)
                    changed = True
    else:
        for k in range(1, len(cur)):
            p = k
            while p > 0 and rank[cur[p - 1]] > rank[cur[p]]:
                cur[p - 1], cur[p] = cur[p], cur[p - 1]
                swaps.append(p - 1)
                p -= 1
    seq = list(objs)
    out = M.id(left_normal_object(M, seq))
    for k in swaps:
        out = M.compose(_adjacent_swap(M, seq, k), out)
        seq[k], seq[k + 1] = seq[k + 1], seq[k]
    return out


def _adjacent_swap(M, seq: list, k: int):
    """Swap positions ``k`` and ``k+1`` inside ``N(seq)``."""
    a, b = seq[k], seq[k + 1]
    if k == 0:
        core = M.sigma(a, b)
    else:
        L = left_normal_object(M, seq[:k])
        core = M.compose(
            M.inv(M.alpha(L, b, a)),
            M.tensor_m(M.id(L), M.sigma(a, b)),
            M.alpha(L, a, b),
        )
    for c in seq[k + 2 :]:
        core = M.tensor_m(core, M.id(c))
    return core


# ---------------------------------------------------------------------------
# validation


@dataclass
class MonoidalReport:
    failures: list = field(default_factory=list)  # (kind, witness tuple, detail)
    checked: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def lines(self) -> list[str]:
        return [f"{kind} fails at {w}: {d}" if d else f"{kind} fails at {w}" for kind, w, d in self.failures]


def _morphisms_between(C, objects):
    return [f for a in objects for b in objects for f in C.hom(a, b)]


def validate_monoidal(M, objects: Sequence | None = None, budget: Budget | None = None, limit: int | None = None) -> MonoidalReport:
    """Bifunctoriality, structure isos, naturality, pentagon and triangle."""
    C = M.category
    objs = list(objects if objects is not None else C.objects)
    rep = MonoidalReport()

    def fail(kind, w, detail=""):
        rep.failures.append((kind, w, detail))
        return limit is not None and len(rep.failures) >= limit

    mors = _morphisms_between(C, objs)
    # totality and ends
    for A, B in iproduct(objs, objs):
        try:
            M.tensor(A, B)
        except KeyError:
            if fail("tensor_obj total", (A, B)):
                return rep
    if M.unit not in objs and not isinstance(M, MatrixPresentation):
        fail("unit is an object", (M.unit,))
    if rep.failures:
        return rep
    for f, g in iproduct(mors, mors):
        tick(budget)
        try:
            h = M.tensor_m(f, g)
        except KeyError:
            if fail("tensor_mor total", (M.render(f), M.render(g))):
                return rep
            continue
        if (C.source(h), C.target(h)) != (
            M.tensor(C.source(f), C.source(g)),
            M.tensor(C.target(f), C.target(g)),
        ):
            if fail("tensor of morphisms has wrong ends", (M.render(f), M.render(g))):
                return rep
    if rep.failures:
        return rep
    for A, B in iproduct(objs, objs):
        if M.tensor_m(M.id(A), M.id(B)) != M.id(M.tensor(A, B)):
            if fail("id (x) id = id", (A, B)):
                return rep
    out_of = {a: [f for f in mors if C.source(f) == a] for a in objs}
    for f, f2 in iproduct(mors, mors):
        for g in out_of[C.target(f)]:
            for g2 in out_of[C.target(f2)]:
                tick(budget)
                lhs = M.compose(M.tensor_m(g, g2), M.tensor_m(f, f2))
                rhs = M.tensor_m(M.compose(g, f), M.compose(g2, f2))
                if lhs != rhs:
                    if fail("interchange", tuple(M.render(x) for x in (g, g2, f, f2))):
                        return rep
    # structure isomorphisms
    for A, B, Cc in iproduct(objs, objs, objs):
        a = M.alpha(A, B, Cc)
        want = (M.tensor(M.tensor(A, B), Cc), M.tensor(A, M.tensor(B, Cc)))
        if (C.source(a), C.target(a)) != want or not C.is_iso(a):
            if fail("associator is an isomorphism", (A, B, Cc)):
                return rep
    for A in objs:
        lam, rho = M.lam(A), M.rho(A)
        if (C.source(lam), C.target(lam)) != (M.tensor(M.unit, A), A) or not C.is_iso(lam):
            if fail("left unitor is an isomorphism", (A,)):
                return rep
        if (C.source(rho), C.target(rho)) != (M.tensor(A, M.unit), A) or not C.is_iso(rho):
            if fail("right unitor is an isomorphism", (A,)):
                return rep
    if rep.failures:
        return rep
    # naturality
    for f, g, h in iproduct(mors, mors, mors):
        tick(budget)
        s = (C.source(f), C.source(g), C.source(h))
        u = (C.target(f), C.target(g), C.target(h))
        lhs = M.compose(M.alpha(*u), M.tensor_m(M.tensor_m(f, g), h))
        rhs = M.compose(M.tensor_m(f, M.tensor_m(g, h)), M.alpha(*s))
        if lhs != rhs:
            if fail("associator naturality", tuple(M.render(x) for x in (f, g, h))):
                return rep
    idI = M.id(M.unit)
    for f in mors:
        a, b = C.source(f), C.target(f)
        if M.compose(M.lam(b), M.tensor_m(idI, f)) != M.compose(f, M.lam(a)):
            if fail("left unitor naturality", (M.render(f),)):
                return rep
        if M.compose(M.rho(b), M.tensor_m(f, idI)) != M.compose(f, M.rho(a)):
            if fail("right unitor naturality", (M.render(f),)):
                return rep
    # pentagon and triangle
    for A, B, Cc, D in iproduct(objs, objs, objs, objs):
        tick(budget)
        AB, BC, CD = M.tensor(A, B), M.tensor(B, Cc), M.tensor(Cc, D)
        lhs = M.compose(M.alpha(A, B, CD), M.alpha(AB, Cc, D))
        rhs = M.compose(
            M.tensor_m(M.id(A), M.alpha(B, Cc, D)),
            M.alpha(A, BC, D),
            M.tensor_m(M.alpha(A, B, Cc), M.id(D)),
        )
        if lhs != rhs:
            if fail("pentagon", (A, B, Cc, D), f"{M.render(lhs)} != {M.render(rhs)}"):
                return rep
    for A, B in iproduct(objs, objs):
        lhs = M.compose(M.tensor_m(M.id(A), M.lam(B)), M.alpha(A, M.unit, B))
        rhs = M.tensor_m(M.rho(A), M.id(B))
        if lhs != rhs:
            if fail("triangle", (A, B), f"{M.render(lhs)} != {M.render(rhs)}"):
                return rep
    rep.checked = {"objects": len(objs), "morphisms": len(mors)}
    return rep


def validate_symmetric(M, objects: Sequence | None = None, budget: Budget | None = None, limit: int | None = None) -> MonoidalReport:
    """:func:`validate_monoidal` plus braiding naturality, symmetry and hexagon."""
    rep = validate_monoidal(M, objects, budget, limit)
    if not rep.ok:
        return rep
    C = M.category
    objs = list(objects if objects is not None else C.objects)
    mors = _morphisms_between(C, objs)

    def fail(kind, w, detail=""):
        rep.failures.append((kind, w, detail))
        return limit is not None and len(rep.failures) >= limit

    for A, B in iproduct(objs, objs):
        s = M.sigma(A, B)
        if (C.source(s), C.target(s)) != (M.tensor(A, B), M.tensor(B, A)):
            if fail("braiding has wrong ends", (A, B)):
                return rep
            continue
        if M.compose(M.sigma(B, A), s) != M.id(M.tensor(A, B)):
            if fail("symmetry", (A, B)):
                return rep
    for f, g in iproduct(mors, mors):
        tick(budget)
        lhs = M.compose(M.sigma(C.target(f), C.target(g)), M.tensor_m(f, g))
        rhs = M.compose(M.tensor_m(g, f), M.sigma(C.source(f), C.source(g)))
        if lhs != rhs:
            if fail("braiding naturality", (M.render(f), M.render(g))):
                return rep
    for A, B, Cc in iproduct(objs, objs, objs):
        lhs = M.compose(M.alpha(B, Cc, A), M.sigma(A, M.tensor(B, Cc)), M.alpha(A, B, Cc))
        rhs = M.compose(
            M.tensor_m(M.id(B), M.sigma(A, Cc)),
            M.alpha(B, A, Cc),
            M.tensor_m(M.sigma(A, B), M.id(Cc)),
        )
        if lhs != rhs:
            if fail("hexagon", (A, B, Cc)):
                return rep
    return rep


# ---------------------------------------------------------------------------
# corpus


def _tabulate(C, tensor_obj, tensor_mor_fn, unit, alpha_fn, lam_fn, rho_fn, name, braid_fn=None):
    objs = list(C.objects)
    tobj = {(A, B): tensor_obj(A, B) for A in objs for B in objs}
    tmor = {(f, g): tensor_mor_fn(f, g) for f in C.morphisms for g in C.morphisms}
    assoc = {(A, B, D): alpha_fn(A, B, D) for A in objs for B in objs for D in objs}
    lam = {A: lam_fn(A) for A in objs}
    rho = {A: rho_fn(A) for A in objs}
    if braid_fn is None:
        return MonoidalPresentation(C, tobj, tmor, unit, assoc, lam, rho, name=name)
    braid = {(A, B): braid_fn(A, B) for A in objs for B in objs}
    return SymmetricMonoidalPresentation(C, tobj, tmor, unit, assoc, lam, rho, name=name, braiding=braid)


def trivial_monoidal() -> SymmetricMonoidalPresentation:
    """One object ``I`` with only its identity."""
    C = FiniteCategory(["I"], {"id_I": ("I", "I")}, {("id_I", "id_I"): "id_I"}, {"I": "id_I"}, name="1")
    return _tabulate(
        C, lambda A, B: "I", lambda f, g: "id_I", "I",
        lambda *a: "id_I", lambda A: "id_I", lambda A: "id_I", "trivial", braid_fn=lambda A, B: "id_I",
    )


def discrete_group_monoidal(n: int) -> SymmetricMonoidalPresentation:
    """Objects ``Z/n`` (named ``e0..``), only identities, tensor is addition."""
    names = [f"e{k}" for k in range(n)]
    C = poset_category(names, [], name=f"disc(C{n})")

    def add(A, B):
        return f"e{(int(A[1:]) + int(B[1:])) % n}"

    def tm(f, g):
        return C.identity(add(C.source(f), C.source(g)))

    return _tabulate(
        C, add, tm, "e0",
        lambda A, B, D: C.identity(add(add(A, B), D)),
        lambda A: C.identity(A), lambda A: C.identity(A),
        f"discrete C{n}", braid_fn=lambda A, B: C.identity(add(A, B)),
    )


def categorical_group(cocycle: dict | None = None, name: str | None = None) -> MonoidalPresentation:
    """Objects ``0, 1`` (the group C_2), each with automorphism group ``{+1, -1}``.

    ``cocycle[(a, b, c)]`` in ``{1, -1}`` gives the associator component
    (default all ``+1``).  Morphisms are named ``+a`` and ``-a``.
    """
    objs = ["0", "1"]
    mor = {}
    comp = {}
    for a in objs:
        mor[f"+{a}"] = (a, a)
        mor[f"-{a}"] = (a, a)
        for s, u in iproduct("+-", "+-"):
            comp[(f"{s}{a}", f"{u}{a}")] = f"{'+' if s == u else '-'}{a}"
    C = FiniteCategory(objs, mor, comp, {a: f"+{a}" for a in objs}, name="C2x{+-1}")
    cocycle = dict(cocycle or {})

    def add(A, B):
        return str((int(A) + int(B)) % 2)

    def tm(f, g):
        sign = "+" if f[0] == g[0] else "-"
        return f"{sign}{add(f[1:], g[1:])}"

    def alpha(A, B, D):
        s = cocycle.get((A, B, D), 1)
        return f"{'+' if s == 1 else '-'}{add(add(A, B), D)}"

    return _tabulate(
        C, add, tm, "0", alpha, lambda A: f"+{A}", lambda A: f"+{A}",
        name if name is not None else ("categorical C2" if not cocycle else "categorical C2 (twisted)"),
    )


def cubic_cocycle() -> dict:
    """``omega(a, b, c) = (-1)^{abc}`` on C_2: a normalized 3-cocycle."""
    return {(a, b, c): (-1 if a == b == c == "1" else 1) for a in "01" for b in "01" for c in "01"}


def symmetric_categorical_group() -> SymmetricMonoidalPresentation:
    """The trivial-cocycle categorical group with identity braiding."""
    M = categorical_group()
    return SymmetricMonoidalPresentation(
        M.category, M.tensor_obj, M.tensor_mor, M.unit, M.associator, M.left_unitor, M.right_unitor,
        name="symmetric categorical C2",
        braiding={(A, B): f"+{(int(A) + int(B)) % 2}" for A in "01" for B in "01"},
    )


def max_poset_monoidal() -> SymmetricMonoidalPresentation:
    """The poset ``0 < 1`` with ``(x) = max`` and unit ``0``."""
    C = poset_category(["0", "1"], [("0", "1")], name="[1]")

    def mx(A, B):
        return max(A, B)

    def tm(f, g):
        a = mx(C.source(f), C.source(g))
        b = mx(C.target(f), C.target(g))
        return C.hom(a, b)[0]

    ident = lambda *objs: C.identity(max(objs))  # noqa: E731
    return _tabulate(
        C, mx, tm, "0", ident, lambda A: C.identity(A), lambda A: C.identity(A),
        "max-[1]", braid_fn=lambda A, B: C.identity(mx(A, B)),
    )


def with_associator(M: MonoidalPresentation, A, B, C, mor) -> MonoidalPresentation:
    """A copy of ``M`` with one associator component replaced (corruption helper)."""
    assoc = dict(M.associator)
    assoc[(A, B, C)] = mor
    cls = type(M)
    kw = {"braiding": M.braiding} if M.symmetric else {}
    return cls(
        M.category, M.tensor_obj, M.tensor_mor, M.unit, assoc, M.left_unitor, M.right_unitor,
        name=M.name + "'", **kw,
    )


def upper_triangular_algebra():
    """The algebra of upper triangular 2x2 matrices over F_2 on ``F_2^3``.

    Basis ``E11, E12, E22``; returns ``(A, mu, eta)`` in the matrix category.
    Its multiplication is not commutative.
    """
    basis = [(0, 0), (0, 1), (1, 1)]

    def prod(x, y):
        (i, j), (k, l) = basis[x], basis[y]
        return basis.index((i, l)) if j == k else None

    rows = [[0] * 9 for _ in range(3)]
    for x in range(3):
        for y in range(3):
            z = prod(x, y)
            if z is not None:
                rows[z][x * 3 + y] = 1
    mu = mat(rows)
    eta = mat([[1], [0], [1]])
    return 3, mu, eta


def is_monoid(M, A, mu, eta) -> list[str]:
    """Failures of the monoid axioms for ``(A, mu, eta)``."""
    out = []
    C = M.category
    AA = M.tensor(A, A)
    if (C.source(mu), C.target(mu)) != (AA, A):
        return [f"mu must be {AA} -> {A}"]
    if (C.source(eta), C.target(eta)) != (M.unit, A):
        return [f"eta must be {M.unit} -> {A}"]
    idA = M.id(A)
    lhs = M.compose(mu, M.tensor_m(mu, idA))
    rhs = M.compose(mu, M.tensor_m(idA, mu), M.alpha(A, A, A))
    if lhs != rhs:
        out.append(f"associativity: {M.render(lhs)} != {M.render(rhs)}")
    if M.compose(mu, M.tensor_m(eta, idA)) != M.lam(A):
        out.append("left unit law")
    if M.compose(mu, M.tensor_m(idA, eta)) != M.rho(A):
        out.append("right unit law")
    return out


def is_commutative_monoid(M, A, mu, eta) -> list[str]:
    out = is_monoid(M, A, mu, eta)
    if M.compose(mu, M.sigma(A, A)) != mu:
        out.append(f"commutativity: mu o sigma = {M.render(M.compose(mu, M.sigma(A, A)))} != {M.render(mu)}")
    return out


def unit_monoid(M):
    """``(I, lambda_I, id_I)``."""
    return M.unit, M.lam(M.unit), M.id(M.unit)
