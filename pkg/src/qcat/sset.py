"""Dimension-truncated finite simplicial sets and simplicial maps.

A :class:`FiniteSimplicialSet` stores *every* simplex up to its truncation
dimension, degenerate ones included.  Simplices are addressed internally by
their position in the level list; identifiers are opaque strings used only
for display and for the text formats.

Faces and degeneracies are total tables::

    X.faces[n][x]  == (d_0 x, ..., d_n x)      (n >= 1)
    X.degens[n][x] == (s_0 x, ..., s_n x)      (n < dim)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct
from math import comb
from typing import Callable, Hashable, Iterable, Iterator, Sequence

from ._common import Budget, tick


@dataclass(frozen=True)
class SimplexRef:
    level: int
    id: str

    def __str__(self) -> str:
        return f"{self.id}@{self.level}"


class FiniteSimplicialSet:
    def __init__(
        self,
        dim: int,
        ids: Sequence[Sequence[str]],
        faces: Sequence[Sequence[tuple[int, ...]]],
        degens: Sequence[Sequence[tuple[int, ...]]],
        keys: Sequence[Sequence[Hashable]] | None = None,
        name: str = "",
    ):
        if dim < 0:
            raise ValueError("truncation dimension must be non-negative")
        if not (len(ids) == len(faces) == len(degens) == dim + 1):
            raise ValueError("tables must have one entry per level 0..dim")
        self.dim = dim
        self.name = name
        self.ids = tuple(tuple(level) for level in ids)
        self.faces = tuple(tuple(tuple(t) for t in level) for level in faces)
        self.degens = tuple(tuple(tuple(t) for t in level) for level in degens)
        self.keys = None if keys is None else tuple(tuple(level) for level in keys)
        self._index = [
            {sid: k for k, sid in reversed(list(enumerate(level)))} for level in self.ids
        ]
        self._key_index = (
            None
            if self.keys is None
            else [{key: k for k, key in enumerate(level)} for level in self.keys]
        )
        # degenerate[n][x] and one preimage (j, y) with s_j y = x
        self._degen_source: list[dict[int, tuple[int, int]]] = [{} for _ in range(dim + 1)]
        for n in range(dim):
            for y, row in enumerate(self.degens[n]):
                for j, x in enumerate(row):
                    if 0 <= x < len(self.ids[n + 1]):
                        self._degen_source[n + 1].setdefault(x, (j, y))
        self._cache: dict = {}

    # -- basic access -------------------------------------------------
    def size(self, n: int) -> int:
        return len(self.ids[n]) if 0 <= n <= self.dim else 0

    def sizes(self) -> tuple[int, ...]:
        return tuple(len(level) for level in self.ids)

    def face(self, n: int, x: int, i: int) -> int:
        return self.faces[n][x][i]

    def degen(self, n: int, x: int, j: int) -> int:
        if n >= self.dim:
            raise IndexError(f"s_{j} on level {n} leaves truncation {self.dim}")
        return self.degens[n][x][j]

    def id_of(self, n: int, x: int) -> str:
        return self.ids[n][x]

    def ref(self, n: int, x: int) -> SimplexRef:
        return SimplexRef(n, self.ids[n][x])

    def index(self, n: int, sid: str) -> int:
        try:
            return self._index[n][sid]
        except (KeyError, IndexError):
            raise KeyError(f"no {n}-simplex named {sid!r}") from None

    def key(self, n: int, x: int) -> Hashable:
        return self.keys[n][x] if self.keys is not None else self.ids[n][x]

    def index_of_key(self, n: int, key: Hashable) -> int:
        if self._key_index is None:
            return self.index(n, key)
        return self._key_index[n][key]

    def is_degenerate(self, n: int, x: int) -> bool:
        return x in self._degen_source[n]

    def degeneracy_source(self, n: int, x: int) -> tuple[int, int] | None:
        """Some ``(j, y)`` with ``s_j y = x``, or None for non-degenerate ``x``."""
        return self._degen_source[n].get(x)

    def nondegenerate(self, n: int) -> list[int]:
        return [x for x in range(self.size(n)) if x not in self._degen_source[n]]

    def top_nondegenerate_level(self) -> int:
        """Largest level carrying a non-degenerate simplex, -1 if empty."""
        for n in range(self.dim, -1, -1):
            if self.nondegenerate(n):
                return n
        return -1

    def is_empty(self) -> bool:
        return self.size(0) == 0

    def __repr__(self) -> str:
        label = f" {self.name}" if self.name else ""
        return f"<FiniteSimplicialSet{label} dim={self.dim} sizes={self.sizes()}>"

    # -- simplicial operators -----------------------------------------
    def vertices(self, n: int, x: int) -> tuple[int, ...]:
        return tuple(self.restrict(n, x, (v,)) for v in range(n + 1))

    def restrict(self, n: int, x: int, verts: Sequence[int]) -> int:
        """The face of ``x`` spanned by the increasing vertex list ``verts``."""
        keep = set(verts)
        level = n
        for v in range(n, -1, -1):
            if v not in keep:
                x = self.faces[level][x][v]
                level -= 1
        return x

    def apply_operator(self, n: int, x: int, theta: Sequence[int]) -> int:
        """``x . theta`` for a monotone ``theta: [p] -> [n]`` given by its values."""
        image = sorted(set(theta))
        y = self.restrict(n, x, image)
        level = len(image) - 1
        pos = {v: k for k, v in enumerate(image)}
        eps = [pos[v] for v in theta]
        for t in range(len(eps) - 1):
            if eps[t] == eps[t + 1]:
                y = self.degen(level, y, t)
                level += 1
        return y

    def ez_decompose(self, n: int, x: int) -> tuple[tuple[int, ...], int, int]:
        """Eilenberg-Zilber form: ``(word, m, base)`` with ``x = s_word base``.

        ``word`` is strictly decreasing (outermost operator first) and ``base``
        is a non-degenerate ``m``-simplex.
        """
        src = self._degen_source[n].get(x)
        if src is None:
            return (), n, x
        j, y = src
        word, m, base = self.ez_decompose(n - 1, y)
        return normalize_degeneracy_word((j,) + word), m, base

    # -- caches used by the searches ------------------------------------
    def face_lookup(self, n: int) -> dict[tuple[int, ...], list[int]]:
        """Level-``n`` simplices grouped by their full face tuple."""
        key = ("faces", n)
        if key not in self._cache:
            table: dict[tuple[int, ...], list[int]] = {}
            for x, fs in enumerate(self.faces[n]):
                table.setdefault(fs, []).append(x)
            self._cache[key] = table
        return self._cache[key]

    def horn_lookup(self, n: int, i: int) -> dict[tuple[int, ...], list[int]]:
        """Level-``n`` simplices grouped by their faces with the ``i``-th removed."""
        key = ("horn", n, i)
        if key not in self._cache:
            table: dict[tuple[int, ...], list[int]] = {}
            for x, fs in enumerate(self.faces[n]):
                table.setdefault(fs[:i] + fs[i + 1 :], []).append(x)
            self._cache[key] = table
        return self._cache[key]

    def single_face_lookup(self, n: int, k: int) -> dict[int, list[int]]:
        """Level-``n`` simplices grouped by ``d_k``."""
        key = ("face1", n, k)
        if key not in self._cache:
            table: dict[int, list[int]] = {}
            for x, fs in enumerate(self.faces[n]):
                table.setdefault(fs[k], []).append(x)
            self._cache[key] = table
        return self._cache[key]


def normalize_degeneracy_word(word: Sequence[int]) -> tuple[int, ...]:
    """Rewrite ``s_{a1} s_{a2} ...`` into the form with strictly decreasing indices.

    Uses ``s_i s_j = s_{j+1} s_i`` for ``i <= j``.
    """
    w = list(word)
    changed = True
    while changed:
        changed = False
        for t in range(len(w) - 1):
            i, j = w[t], w[t + 1]
            if i <= j:
                w[t], w[t + 1] = j + 1, i
                changed = True
    return tuple(w)


def degeneracy_name(word: Sequence[int], base: str) -> str:
    if not word:
        return base
    return ".".join(f"s{j}" for j in word) + "." + base


# ---------------------------------------------------------------------------
# generic constructors


def from_keys(
    dim: int,
    level_keys: Sequence[Sequence[Hashable]],
    face_fn: Callable[[int, Hashable, int], Hashable],
    degen_fn: Callable[[int, Hashable, int], Hashable],
    name_fn: Callable[[int, Hashable], str] = lambda n, k: str(k),
    name: str = "",
) -> FiniteSimplicialSet:
    """Build a simplicial set from structured simplex keys.

    ``face_fn(n, key, i)`` must return the key of ``d_i`` at level ``n - 1``;
    ``degen_fn(n, key, j)`` the key of ``s_j`` at level ``n + 1``.
    """
    level_keys = [list(level) for level in level_keys]
    index = [{k: x for x, k in enumerate(level)} for level in level_keys]
    faces, degens = [], []
    for n in range(dim + 1):
        if n == 0:
            faces.append([() for _ in level_keys[0]])
        else:
            faces.append(
                [tuple(index[n - 1][face_fn(n, k, i)] for i in range(n + 1)) for k in level_keys[n]]
            )
        if n < dim:
            degens.append(
                [tuple(index[n + 1][degen_fn(n, k, j)] for j in range(n + 1)) for k in level_keys[n]]
            )
        else:
            degens.append([() for _ in level_keys[n]])
    ids = [[name_fn(n, k) for k in level] for n, level in enumerate(level_keys)]
    return FiniteSimplicialSet(dim, ids, faces, degens, keys=level_keys, name=name)


def from_nondegenerate(
    dim: int,
    simplices: Sequence[Sequence[str]],
    faces: dict[str, Sequence[tuple[Sequence[int], str]]],
    name: str = "",
) -> FiniteSimplicialSet:
    """Close a presentation by non-degenerate simplices under degeneracies.

    ``simplices[n]`` lists the non-degenerate ``n``-simplices (levels above
    ``len(simplices) - 1`` have none).  ``faces[x]`` gives ``d_0 x .. d_n x``,
    each as ``(word, base)``: the face is ``s_word base`` in normal form.
    Simplices are keyed by ``(word, base)``; a degenerate one is named like
    ``s1.s0.x``.  Raises ``ValueError`` on references to unknown simplices
    or on face lists of the wrong length.
    """
    level_of: dict[str, int] = {}
    for n, level in enumerate(simplices):
        for sid in level:
            if sid in level_of:
                raise ValueError(f"duplicate simplex identifier {sid!r}")
            level_of[sid] = n
    for sid, n in level_of.items():
        if n > dim:
            raise ValueError(f"simplex {sid!r} at level {n} above truncation {dim}")
        if n == 0:
            continue
        fs = faces.get(sid)
        if fs is None or len(fs) != n + 1:
            raise ValueError(f"simplex {sid!r} needs exactly {n + 1} faces")
        for word, base in fs:
            if base not in level_of:
                raise ValueError(f"face of {sid!r} refers to unknown simplex {base!r}")
            if level_of[base] + len(word) != n - 1:
                raise ValueError(f"face {degeneracy_name(word, base)} of {sid!r} has wrong level")

    def face_key(key, i):
        word, base = key
        prefix: list[int] = []
        cur = i
        for t, j in enumerate(word):
            if cur < j:
                prefix.append(j - 1)
            elif cur in (j, j + 1):
                return normalize_degeneracy_word(prefix + list(word[t + 1 :])), base
            else:
                prefix.append(j)
                cur -= 1
        w2, b2 = faces[base][cur]
        return normalize_degeneracy_word(prefix + list(w2)), b2

    level_keys: list[list] = []
    for n in range(dim + 1):
        keys = [((), sid) for sid in (simplices[n] if n < len(simplices) else [])]
        seen = set(keys)
        if n > 0:
            for key in level_keys[n - 1]:
                for j in range(n):
                    k2 = (normalize_degeneracy_word((j,) + key[0]), key[1])
                    if k2 not in seen:
                        seen.add(k2)
                        keys.append(k2)
        level_keys.append(keys)

    return from_keys(
        dim,
        level_keys,
        lambda n, k, i: face_key(k, i),
        lambda n, k, j: (normalize_degeneracy_word((j,) + k[0]), k[1]),
        lambda n, k: degeneracy_name(*k),
        name=name,
    )


def nondegenerate_presentation(X: FiniteSimplicialSet):
    """Inverse of :func:`from_nondegenerate`: ``(simplices, faces)``."""
    simplices = [[X.ids[n][x] for x in X.nondegenerate(n)] for n in range(X.dim + 1)]
    while simplices and not simplices[-1]:
        simplices.pop()
    faces = {}
    for n in range(1, X.dim + 1):
        for x in X.nondegenerate(n):
            entries = []
            for y in X.faces[n][x]:
                word, m, base = X.ez_decompose(n - 1, y)
                entries.append((word, X.ids[m][base]))
            faces[X.ids[n][x]] = entries
    return simplices, faces


def extend_truncation(X: FiniteSimplicialSet, N: int) -> FiniteSimplicialSet:
    """Re-close ``X`` under degeneracies up to level ``N``.

    The result adds no non-degenerate simplex above ``X.dim``: it is the
    ``X.dim``-skeletal reading of ``X``.
    """
    simplices, faces = nondegenerate_presentation(X)
    return from_nondegenerate(N, simplices, faces, name=X.name)


# ---------------------------------------------------------------------------
# standard objects


def _monotone_tuples(length: int, m: int) -> list[tuple[int, ...]]:
    out = []

    def rec(prefix, lo):
        if len(prefix) == length:
            out.append(tuple(prefix))
            return
        for v in range(lo, m + 1):
            prefix.append(v)
            rec(prefix, v)
            prefix.pop()

    rec([], 0)
    return out


def _vertex_name(m: int):
    if m <= 9:
        return lambda n, k: "".join(str(v) for v in k)
    return lambda n, k: ",".join(str(v) for v in k)


def standard_simplex(m: int, N: int) -> FiniteSimplicialSet:
    """Delta^m truncated at level N: n-simplices are monotone maps [n] -> [m]."""
    if m < 0 or N < 0:
        raise ValueError("m and N must be non-negative")
    return from_keys(
        N,
        [_monotone_tuples(n + 1, m) for n in range(N + 1)],
        lambda n, k, i: k[:i] + k[i + 1 :],
        lambda n, k, j: k[: j + 1] + k[j:],
        _vertex_name(m),
        name=f"Delta^{m}",
    )


def empty(N: int = 0) -> FiniteSimplicialSet:
    return FiniteSimplicialSet(N, [[]] * (N + 1), [[]] * (N + 1), [[]] * (N + 1), keys=[[]] * (N + 1), name="empty")


def point(N: int, label: str = "*") -> FiniteSimplicialSet:
    """A one-point simplicial set whose n-simplex is named ``label`` repeated."""
    return from_keys(
        N,
        [[n] for n in range(N + 1)],
        lambda n, k, i: n - 1,
        lambda n, k, j: n + 1,
        lambda n, k: label * (n + 1),
        name="point",
    )


def preorder_nerve(
    elements: Sequence[Hashable],
    leq: Callable[[Hashable, Hashable], bool],
    N: int,
    label: Callable[[Hashable], str] = str,
    sep: str = "<",
    name: str = "",
) -> FiniteSimplicialSet:
    """Nerve of a finite preorder: ``n``-simplices are chains ``x0 <= .. <= xn``.

    Keys are the chains as tuples of elements.  With ``leq`` always true this
    is the codiscrete simplicial set on ``elements``.
    """
    elements = list(elements)
    levels = [[(a,) for a in elements]]
    for n in range(1, N + 1):
        levels.append([c + (b,) for c in levels[-1] for b in elements if leq(c[-1], b)])
    return from_keys(
        N,
        levels,
        lambda n, k, i: k[:i] + k[i + 1 :],
        lambda n, k, j: k[: j + 1] + k[j:],
        lambda n, k: sep.join(label(a) for a in k),
        name=name,
    )


def codiscrete(points: Sequence[Hashable], N: int, name: str = "") -> FiniteSimplicialSet:
    """All tuples of points; a Kan complex with contractible components."""
    return preorder_nerve(points, lambda a, b: True, N, sep=",", name=name or "codiscrete")


def _sub_of_standard(m: int, N: int, facets: Iterable[frozenset[int]], name: str):
    facets = [frozenset(f) for f in facets]
    full = standard_simplex(m, N)
    keep = [
        [k for k in full.keys[n] if any(set(k) <= f for f in facets)] for n in range(N + 1)
    ]
    X = from_keys(
        N,
        keep,
        lambda n, k, i: k[:i] + k[i + 1 :],
        lambda n, k, j: k[: j + 1] + k[j:],
        _vertex_name(m),
        name=name,
    )
    incl = SimplicialMap(
        X, full, tuple(tuple(full.index_of_key(n, k) for k in X.keys[n]) for n in range(N + 1))
    )
    return X, incl


def horn(m: int, i: int, N: int) -> FiniteSimplicialSet:
    """The horn Lambda^m_i: union of the faces of Delta^m other than the i-th."""
    return horn_inclusion(m, i, N).source


def horn_inclusion(m: int, i: int, N: int) -> "SimplicialMap":
    if m < 1:
        raise ValueError("horns need m >= 1")
    if not 0 <= i <= m:
        raise ValueError(f"horn index {i} out of range 0..{m}")
    facets = [frozenset(range(m + 1)) - {j} for j in range(m + 1) if j != i]
    return _sub_of_standard(m, N, facets, f"Lambda^{m}_{i}")[1]


def boundary(m: int, N: int) -> FiniteSimplicialSet:
    return boundary_inclusion(m, N).source


def boundary_inclusion(m: int, N: int) -> "SimplicialMap":
    if m < 0:
        raise ValueError("m must be non-negative")
    facets = [frozenset(range(m + 1)) - {j} for j in range(m + 1)] if m > 0 else []
    return _sub_of_standard(m, N, facets, f"dDelta^{m}")[1]


def subcomplex(X: FiniteSimplicialSet, generators: Iterable[tuple[int, int]], name: str = ""):
    """Smallest simplicial subset containing ``generators``; returns the inclusion."""
    keep = [set() for _ in range(X.dim + 1)]
    stack = list(generators)
    while stack:
        n, x = stack.pop()
        if x in keep[n]:
            continue
        keep[n].add(x)
        if n > 0:
            stack.extend((n - 1, y) for y in X.faces[n][x])
    for n in range(1, X.dim + 1):
        for y in sorted(keep[n - 1]):
            keep[n].update(X.degens[n - 1][y])
    order = [sorted(level) for level in keep]
    pos = [{x: k for k, x in enumerate(level)} for level in order]
    faces = [[() for _ in order[0]]] + [
        [tuple(pos[n - 1][y] for y in X.faces[n][x]) for x in order[n]] for n in range(1, X.dim + 1)
    ]
    degens = [
        [tuple(pos[n + 1][y] for y in X.degens[n][x]) for x in order[n]] for n in range(X.dim)
    ] + [[() for _ in order[X.dim]]]
    ids = [[X.ids[n][x] for x in order[n]] for n in range(X.dim + 1)]
    keys = None if X.keys is None else [[X.keys[n][x] for x in order[n]] for n in range(X.dim + 1)]
    S = FiniteSimplicialSet(X.dim, ids, faces, degens, keys=keys, name=name)
    return SimplicialMap(S, X, tuple(tuple(level) for level in order))


def retruncate(X: FiniteSimplicialSet, N: int) -> FiniteSimplicialSet:
    """Drop every level above ``N`` (``N <= X.dim``)."""
    if N > X.dim:
        raise ValueError("cannot raise the truncation; use extend_truncation")
    keys = None if X.keys is None else X.keys[: N + 1]
    degens = list(X.degens[:N]) + [[() for _ in X.ids[N]]]
    return FiniteSimplicialSet(N, X.ids[: N + 1], X.faces[: N + 1], degens, keys=keys, name=X.name)


def product(X: FiniteSimplicialSet, Y: FiniteSimplicialSet) -> FiniteSimplicialSet:
    """Levelwise product, truncated at the smaller dimension."""
    N = min(X.dim, Y.dim)
    return from_keys(
        N,
        [list(iproduct(range(X.size(n)), range(Y.size(n)))) for n in range(N + 1)],
        lambda n, k, i: (X.faces[n][k[0]][i], Y.faces[n][k[1]][i]),
        lambda n, k, j: (X.degens[n][k[0]][j], Y.degens[n][k[1]][j]),
        lambda n, k: f"({X.ids[n][k[0]]},{Y.ids[n][k[1]]})",
        name=f"{X.name or 'X'}x{Y.name or 'Y'}",
    )


def disjoint_union(X: FiniteSimplicialSet, Y: FiniteSimplicialSet) -> FiniteSimplicialSet:
    N = min(X.dim, Y.dim)
    clash = any(set(X.ids[n]) & set(Y.ids[n]) for n in range(N + 1))

    def name(n, k):
        side, x = k
        sid = (X if side == 0 else Y).ids[n][x]
        return f"{'LR'[side]}.{sid}" if clash else sid

    return from_keys(
        N,
        [[(0, x) for x in range(X.size(n))] + [(1, y) for y in range(Y.size(n))] for n in range(N + 1)],
        lambda n, k, i: (k[0], (X if k[0] == 0 else Y).faces[n][k[1]][i]),
        lambda n, k, j: (k[0], (X if k[0] == 0 else Y).degens[n][k[1]][j]),
        name,
    )


# ---------------------------------------------------------------------------
# validation


@dataclass
class Violation:
    rule: str
    level: int
    simplex: str
    indices: tuple = ()
    detail: str = ""

    def __str__(self) -> str:
        idx = ",".join(map(str, self.indices))
        return f"{self.rule} fails at {self.simplex}@{self.level} (i,j={idx}) {self.detail}".rstrip()


@dataclass
class ValidationReport:
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.ok

    def lines(self) -> list[str]:
        return [str(v) for v in self.failures]


def validate(X: FiniteSimplicialSet, limit: int | None = None) -> ValidationReport:
    """Check the simplicial identities and bookkeeping of ``X``.

    Every violated identity is reported with the offending simplex and the
    indices ``(i, j)``.  ``limit`` caps the number of failures collected.
    """
    rep = ValidationReport()

    def fail(*args, **kw):
        rep.failures.append(Violation(*args, **kw))
        return limit is not None and len(rep.failures) >= limit

    N = X.dim
    for n in range(N + 1):
        seen = set()
        for sid in X.ids[n]:
            if sid in seen:
                if fail("duplicate identifier", n, sid):
                    return rep
            seen.add(sid)
        size = X.size(n)
        for x in range(size):
            if n > 0:
                fs = X.faces[n][x]
                if len(fs) != n + 1 or any(not 0 <= y < X.size(n - 1) for y in fs):
                    if fail("face table", n, X.ids[n][x], detail=f"bad entry {fs}"):
                        return rep
            if n < N:
                ds = X.degens[n][x]
                if len(ds) != n + 1 or any(not 0 <= y < X.size(n + 1) for y in ds):
                    if fail("degeneracy table", n, X.ids[n][x], detail=f"bad entry {ds}"):
                        return rep
    if rep.failures:
        return rep

    F, S = X.faces, X.degens
    for n in range(2, N + 1):
        for x in range(X.size(n)):
            for j in range(n + 1):
                for i in range(j):
                    if F[n - 1][F[n][x][j]][i] != F[n - 1][F[n][x][i]][j - 1]:
                        if fail("d_i d_j = d_{j-1} d_i", n, X.ids[n][x], (i, j)):
                            return rep
    for n in range(N):
        for x in range(X.size(n)):
            for j in range(n + 1):
                sx = S[n][x][j]
                if F[n + 1][sx][j] != x:
                    if fail("d_j s_j = id", n, X.ids[n][x], (j, j)):
                        return rep
                if F[n + 1][sx][j + 1] != x:
                    if fail("d_{j+1} s_j = id", n, X.ids[n][x], (j + 1, j)):
                        return rep
                for i in range(n + 2):
                    if i < j:
                        if F[n + 1][sx][i] != S[n - 1][F[n][x][i]][j - 1]:
                            if fail("d_i s_j = s_{j-1} d_i", n, X.ids[n][x], (i, j)):
                                return rep
                    elif i > j + 1:
                        if F[n + 1][sx][i] != S[n - 1][F[n][x][i - 1]][j]:
                            if fail("d_i s_j = s_j d_{i-1}", n, X.ids[n][x], (i, j)):
                                return rep
    for n in range(N - 1):
        for x in range(X.size(n)):
            for j in range(n + 1):
                for i in range(j + 1):
                    if S[n + 1][S[n][x][j]][i] != S[n + 1][S[n][x][i]][j + 1]:
                        if fail("s_i s_j = s_{j+1} s_i", n, X.ids[n][x], (i, j)):
                            return rep
    return rep


# ---------------------------------------------------------------------------
# maps


@dataclass(frozen=True, eq=False)
class SimplicialMap:
    """``table[n][x]`` is the image of the ``n``-simplex ``x``; levels 0..dim."""

    source: FiniteSimplicialSet
    target: FiniteSimplicialSet
    table: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.table) - 1

    def __call__(self, n: int, x: int) -> int:
        return self.table[n][x]

    def key(self) -> tuple:
        return self.table

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SimplicialMap)
            and self.source is other.source
            and self.target is other.target
            and self.table == other.table
        )

    def __hash__(self) -> int:
        return hash(self.table)

    def restrict_levels(self, d: int) -> "SimplicialMap":
        return SimplicialMap(self.source, self.target, self.table[: d + 1])

    def describe(self) -> dict[str, str]:
        """Images of the non-degenerate simplices, by identifier."""
        out = {}
        for n in range(self.dim + 1):
            for x in self.source.nondegenerate(n):
                out[self.source.ids[n][x]] = self.target.ids[n][self.table[n][x]]
        return out


def identity_map(X: FiniteSimplicialSet) -> SimplicialMap:
    return SimplicialMap(X, X, tuple(tuple(range(X.size(n))) for n in range(X.dim + 1)))


def compose_maps(g: SimplicialMap, f: SimplicialMap) -> SimplicialMap:
    """``g o f``."""
    d = min(f.dim, g.dim)
    return SimplicialMap(f.source, g.target, tuple(tuple(g.table[n][y] for y in f.table[n]) for n in range(d + 1)))


def validate_map(f: SimplicialMap) -> ValidationReport:
    rep = ValidationReport()
    X, Y = f.source, f.target
    d = f.dim
    if d > min(X.dim, Y.dim):
        rep.failures.append(Violation("map levels exceed truncation", d, "-"))
        return rep
    for n in range(d + 1):
        if len(f.table[n]) != X.size(n) or any(not 0 <= y < Y.size(n) for y in f.table[n]):
            rep.failures.append(Violation("map table", n, "-"))
            return rep
    for n in range(1, d + 1):
        for x in range(X.size(n)):
            fx = f.table[n][x]
            for i in range(n + 1):
                if f.table[n - 1][X.faces[n][x][i]] != Y.faces[n][fx][i]:
                    rep.failures.append(Violation("f d_i = d_i f", n, X.ids[n][x], (i,)))
    for n in range(d):
        for x in range(X.size(n)):
            fx = f.table[n][x]
            for j in range(n + 1):
                if f.table[n + 1][X.degens[n][x][j]] != Y.degens[n][fx][j]:
                    rep.failures.append(Violation("f s_j = s_j f", n, X.ids[n][x], (j,)))
    return rep


def map_from_keys(X: FiniteSimplicialSet, Y: FiniteSimplicialSet, fn: Callable[[int, Hashable], Hashable], d: int | None = None) -> SimplicialMap:
    """Map given on structured keys: ``fn(n, key_in_X) -> key_in_Y``."""
    d = min(X.dim, Y.dim) if d is None else d
    return SimplicialMap(
        X, Y, tuple(tuple(Y.index_of_key(n, fn(n, X.key(n, x))) for x in range(X.size(n))) for n in range(d + 1))
    )


def product_map(f: SimplicialMap, g: SimplicialMap, source: FiniteSimplicialSet, target: FiniteSimplicialSet) -> SimplicialMap:
    """``f x g`` between the given product sets (built by :func:`product`)."""
    d = min(f.dim, g.dim, source.dim, target.dim)
    return SimplicialMap(
        source,
        target,
        tuple(
            tuple(target.index_of_key(n, (f.table[n][a], g.table[n][b])) for a, b in source.keys[n])
            for n in range(d + 1)
        ),
    )


def simplex_map(X: FiniteSimplicialSet, n: int, x: int, std: FiniteSimplicialSet | None = None) -> SimplicialMap:
    """The Yoneda map ``Delta^n -> X`` classifying the simplex ``x``."""
    std = std if std is not None else standard_simplex(n, X.dim)
    d = min(std.dim, X.dim)
    return SimplicialMap(
        std, X, tuple(tuple(X.apply_operator(n, x, k) for k in std.keys[p]) for p in range(d + 1))
    )


def coface_map(n: int, k: int, N: int) -> SimplicialMap:
    """``delta^k: Delta^{n-1} -> Delta^n`` (skips vertex ``k``)."""
    src, tgt = standard_simplex(n - 1, N), standard_simplex(n, N)
    return map_from_keys(src, tgt, lambda p, key: tuple(v + (v >= k) for v in key))


def codegeneracy_map(n: int, k: int, N: int) -> SimplicialMap:
    """``sigma^k: Delta^{n+1} -> Delta^n`` (repeats vertex ``k``)."""
    src, tgt = standard_simplex(n + 1, N), standard_simplex(n, N)
    return map_from_keys(src, tgt, lambda p, key: tuple(v - (v > k) for v in key))


# ---------------------------------------------------------------------------
# enumeration of maps


def iter_maps(
    X: FiniteSimplicialSet,
    Y: FiniteSimplicialSet,
    d: int | None = None,
    fixed: dict[tuple[int, int], int] | None = None,
    budget: Budget | None = None,
    injective: bool = False,
) -> Iterator[SimplicialMap]:
    """Yield all simplicial maps ``X -> Y`` on levels ``0..d``.

    Backtracks over the non-degenerate simplices of ``X`` by increasing
    level; candidates are scanned in ``Y``'s order, so maps come out in
    lexicographic order of the assignment.  ``fixed`` pins images of chosen
    simplices (degenerate or not).  With ``injective`` the search keeps
    non-degenerate simplices injectively on non-degenerate ones (the
    isomorphism search).
    """
    d = min(X.dim, Y.dim) if d is None else d
    if d > min(X.dim, Y.dim):
        raise ValueError(f"d={d} exceeds truncation {min(X.dim, Y.dim)}")
    fixed = fixed or {}
    order = [(n, X.nondegenerate(n)) for n in range(d + 1)]
    table = [[-1] * X.size(n) for n in range(d + 1)]
    used = [set() for _ in range(d + 1)]

    def fill_degenerate(n: int) -> bool:
        for x in range(X.size(n)):
            src = X.degeneracy_source(n, x)
            if src is None:
                continue
            j, y = src
            val = Y.degens[n - 1][table[n - 1][y]][j]
            if fixed.get((n, x), val) != val:
                return False
            table[n][x] = val
        return True

    def rec(n: int, pos: int):
        if n > d:
            yield SimplicialMap(X, Y, tuple(tuple(level) for level in table))
            return
        if pos == 0 and n > 0 and not fill_degenerate(n):
            return
        nd = order[n][1]
        if pos == len(nd):
            yield from rec(n + 1, 0)
            return
        x = nd[pos]
        if n == 0:
            cands = range(Y.size(0))
        else:
            want = tuple(table[n - 1][y] for y in X.faces[n][x])
            cands = Y.face_lookup(n).get(want, ())
        pin = fixed.get((n, x))
        for y in cands:
            if pin is not None and y != pin:
                continue
            if injective and (y in used[n] or Y.is_degenerate(n, y)):
                continue
            tick(budget)
            table[n][x] = y
            used[n].add(y)
            yield from rec(n, pos + 1)
            used[n].discard(y)
        table[n][x] = -1

    yield from rec(0, 0)


def enumerate_maps(X, Y, d=None, fixed=None, budget=None) -> list[SimplicialMap]:
    return list(iter_maps(X, Y, d, fixed=fixed, budget=budget))


def find_isomorphism(X: FiniteSimplicialSet, Y: FiniteSimplicialSet, d: int | None = None, budget: Budget | None = None) -> SimplicialMap | None:
    """An isomorphism ``X -> Y`` on levels ``0..d``, or None."""
    d = min(X.dim, Y.dim) if d is None else d
    if any(X.size(n) != Y.size(n) for n in range(d + 1)):
        return None
    if any(len(X.nondegenerate(n)) != len(Y.nondegenerate(n)) for n in range(d + 1)):
        return None
    for f in iter_maps(X, Y, d, budget=budget, injective=True):
        if all(len(set(f.table[n])) == Y.size(n) for n in range(d + 1)):
            return f
    return None


def is_isomorphism(f: SimplicialMap) -> bool:
    return validate_map(f).ok and all(
        len(set(f.table[n])) == len(f.table[n]) == f.target.size(n) for n in range(f.dim + 1)
    )


def monotone_count(m: int, n: int) -> int:
    """Number of monotone maps [n] -> [m]."""
    return comb(m + n + 1, n + 1)


# ---------------------------------------------------------------------------
# mapping spaces


@dataclass(eq=False)
class MappingSpace:
    """``Map(X, Y)`` with its simplices realised as maps ``X x Delta^n -> Y``."""

    space: FiniteSimplicialSet
    source: FiniteSimplicialSet
    target: FiniteSimplicialSet
    maps: list  # maps[n][k] is the SimplicialMap behind simplex k at level n
    products: list  # products[n] = X x Delta^n
    truncation: int


def mapping_space(X: FiniteSimplicialSet, Y: FiniteSimplicialSet, d: int, budget: Budget | None = None) -> MappingSpace:
    """``Map(X, Y)_n = hom(X x Delta^n, Y)`` for ``n <= d``.

    Maps are computed on levels up to ``t = min(X.dim, Y.dim)``.
    """
    t = min(X.dim, Y.dim)
    prods = [product(X, standard_simplex(n, t)) for n in range(d + 2)]
    level_maps = [list(iter_maps(prods[n], Y, t, budget=budget)) for n in range(d + 1)]
    index = [{f.table: k for k, f in enumerate(level)} for level in level_maps]
    idX = identity_map(X)

    def pull(n_from: int, n_to: int, g: SimplicialMap, f: SimplicialMap) -> int:
        h = product_map(idX, g, prods[n_to], prods[n_from])
        return index[n_to][compose_maps(f, h).table]

    cofaces = {(n, k): coface_map(n, k, t) for n in range(1, d + 1) for k in range(n + 1)}
    codegens = {(n, k): codegeneracy_map(n, k, t) for n in range(d) for k in range(n + 1)}
    faces = [[() for _ in level_maps[0]]] + [
        [tuple(pull(n, n - 1, cofaces[(n, k)], f) for k in range(n + 1)) for f in level_maps[n]]
        for n in range(1, d + 1)
    ]
    degens = [
        [tuple(pull(n, n + 1, codegens[(n, k)], f) for k in range(n + 1)) for f in level_maps[n]]
        for n in range(d)
    ] + [[() for _ in level_maps[d]]]
    ids = [[f"m{n}_{k}" for k in range(len(level_maps[n]))] for n in range(d + 1)]
    keys = [[f.table for f in level] for level in level_maps]
    space = FiniteSimplicialSet(d, ids, faces, degens, keys=keys, name=f"Map({X.name},{Y.name})")
    return MappingSpace(space, X, Y, level_maps, prods, t)


def restriction_map(i: SimplicialMap, big: MappingSpace, small: MappingSpace) -> SimplicialMap:
    """``Map(L, Y) -> Map(K, Y)`` induced by ``i: K -> L`` (precomposition)."""
    d = min(big.space.dim, small.space.dim)
    index = [{f.table: k for k, f in enumerate(level)} for level in small.maps]
    table = []
    for n in range(d + 1):
        ident = identity_map(standard_simplex(n, big.truncation))
        h = product_map(i, ident, small.products[n], big.products[n])
        table.append(tuple(index[n][compose_maps(f, h).table] for f in big.maps[n]))
    return SimplicialMap(big.space, small.space, tuple(table))




__all__ = [
    "FiniteSimplicialSet",
    "SimplexRef",
    "SimplicialMap",
    "MappingSpace",
    "ValidationReport",
    "Violation",
    "boundary",
    "boundary_inclusion",
    "codegeneracy_map",
    "coface_map",
    "compose_maps",
    "disjoint_union",
    "empty",
    "enumerate_maps",
    "extend_truncation",
    "find_isomorphism",
    "from_keys",
    "from_nondegenerate",
    "horn",
    "horn_inclusion",
    "identity_map",
    "is_isomorphism",
    "iter_maps",
    "map_from_keys",
    "mapping_space",
    "monotone_count",
    "nondegenerate_presentation",
    "point",
    "product",
    "product_map",
    "restriction_map",
    "retruncate",
    "simplex_map",
    "standard_simplex",
    "subcomplex",
    "validate",
    "validate_map",
]
