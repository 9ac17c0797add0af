"""Horn fillers, lifting properties and Kan / quasi-category classification."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from ._common import Budget, Verdict, tick
from .sset import FiniteSimplicialSet, SimplicialMap


@dataclass(frozen=True)
class HornInstance:
    """A map ``Lambda^n_i -> X`` given by its faces.

    ``faces[j]`` is the index of the ``(n-1)``-simplex ``d_j``; the entry at
    ``missing_face`` is None.
    """

    dim: int
    missing_face: int
    faces: tuple

    def refs(self, X: FiniteSimplicialSet) -> tuple:
        return tuple(None if y is None else X.ref(self.dim - 1, y) for y in self.faces)

    def render(self, X: FiniteSimplicialSet) -> str:
        parts = ["." if y is None else X.ids[self.dim - 1][y] for y in self.faces]
        return f"Lambda^{self.dim}_{self.missing_face}({', '.join(parts)})"

    @property
    def given(self) -> tuple:
        return tuple(y for y in self.faces if y is not None)


@dataclass
class ClassificationVerdict:
    kind: str  # "kan" | "quasicategory" | "nerve_like" | "none"
    checked_dim: int
    failure_witness: HornInstance | None = None
    multiplicity_witness: tuple | None = None  # (HornInstance, (filler1, filler2))

    def __bool__(self) -> bool:
        return self.kind != "none"

    def render(self, X: FiniteSimplicialSet) -> str:
        if self.failure_witness is not None:
            return f"no filler for {self.failure_witness.render(X)}"
        if self.multiplicity_witness is not None:
            h, (a, b) = self.multiplicity_witness
            n = h.dim
            return f"two fillers {X.ids[n][a]}, {X.ids[n][b]} for {h.render(X)}"
        return f"{self.kind} up to dim {self.checked_dim}"


def horn_is_compatible(X: FiniteSimplicialSet, h: HornInstance) -> bool:
    n, i = h.dim, h.missing_face
    if len(h.faces) != n + 1 or h.faces[i] is not None:
        return False
    if any(y is None or not 0 <= y < X.size(n - 1) for j, y in enumerate(h.faces) if j != i):
        return False
    if n < 2:
        return True
    F = X.faces[n - 1]
    for k in range(n + 1):
        for j in range(k):
            if i in (j, k):
                continue
            if F[h.faces[k]][j] != F[h.faces[j]][k - 1]:
                return False
    return True


def find_fillers(X: FiniteSimplicialSet, h: HornInstance) -> list[int]:
    """All ``n``-simplices whose faces other than the missing one match ``h``."""
    if h.dim > X.dim:
        raise ValueError(f"horn dimension {h.dim} above truncation {X.dim}")
    if not horn_is_compatible(X, h):
        raise ValueError("horn is incompatible with the face tables")
    return list(X.horn_lookup(h.dim, h.missing_face).get(h.given, ()))


def iter_compatible_tuples(
    X: FiniteSimplicialSet,
    n: int,
    skip: int | None,
    allowed: Sequence[Sequence[int] | None] | None = None,
    budget: Budget | None = None,
) -> Iterator[tuple]:
    """Tuples ``(y_0..y_n)`` of ``(n-1)``-simplices with ``d_j y_k = d_{k-1} y_j``.

    Position ``skip`` (if any) is left as None.  ``allowed[k]``, when given,
    restricts the candidates at position ``k``.  Positions are fixed in
    index order and every compatibility constraint with an earlier position
    is intersected eagerly.
    """
    positions = [k for k in range(n + 1) if k != skip]
    out: list = [None] * (n + 1)
    lower = n - 1

    def candidates(k: int):
        cons = []
        if lower >= 1:
            for j in positions:
                if j >= k:
                    break
                # d_j y_k = d_{k-1} y_j
                cons.append((j, X.faces[lower][out[j]][k - 1]))
        base = None if allowed is None else allowed[k]
        if not cons:
            return range(X.size(lower)) if base is None else base
        j0, v0 = cons[0]
        pool = X.single_face_lookup(lower, j0).get(v0, ())
        rest = cons[1:]
        F = X.faces[lower]
        res = [y for y in pool if all(F[y][j] == v for j, v in rest)]
        if base is not None:
            allowed_set = set(base)
            res = [y for y in res if y in allowed_set]
        return res

    def rec(t: int):
        if t == len(positions):
            yield tuple(out)
            return
        k = positions[t]
        for y in candidates(k):
            tick(budget)
            out[k] = y
            yield from rec(t + 1)
        out[k] = None

    yield from rec(0)


def enumerate_horns(X: FiniteSimplicialSet, n: int, i: int, budget: Budget | None = None) -> list[HornInstance]:
    if not 1 <= n <= X.dim:
        raise ValueError(f"horn dimension {n} outside 1..{X.dim}")
    if not 0 <= i <= n:
        raise ValueError(f"horn index {i} out of range 0..{n}")
    return [HornInstance(n, i, t) for t in iter_compatible_tuples(X, n, i, budget=budget)]


def _scan(X, dmax, indices, want_unique, budget):
    if dmax > X.dim:
        raise ValueError(f"dmax={dmax} above truncation {X.dim}")
    for n in range(1, dmax + 1):
        for i in indices(n):
            table = X.horn_lookup(n, i)
            for t in iter_compatible_tuples(X, n, i, budget=budget):
                h = HornInstance(n, i, t)
                fillers = table.get(h.given, ())
                if not fillers:
                    return "fail", h, None
                if want_unique and len(fillers) > 1:
                    return "multi", h, (fillers[0], fillers[1])
    return "ok", None, None


def check_quasicategory(X: FiniteSimplicialSet, dmax: int, budget: Budget | None = None) -> ClassificationVerdict:
    """Every inner horn of dimension <= dmax has a filler."""
    status, h, _ = _scan(X, dmax, lambda n: range(1, n), False, budget)
    if status == "ok":
        return ClassificationVerdict("quasicategory", dmax)
    return ClassificationVerdict("none", dmax, failure_witness=h)


def check_kan(X: FiniteSimplicialSet, dmax: int, budget: Budget | None = None) -> ClassificationVerdict:
    """Every horn (inner and outer) of dimension <= dmax has a filler."""
    status, h, _ = _scan(X, dmax, lambda n: range(n + 1), False, budget)
    if status == "ok":
        return ClassificationVerdict("kan", dmax)
    return ClassificationVerdict("none", dmax, failure_witness=h)


def check_unique_inner_fillers(X: FiniteSimplicialSet, dmax: int, budget: Budget | None = None) -> ClassificationVerdict:
    """Every inner horn of dimension <= dmax has exactly one filler."""
    status, h, pair = _scan(X, dmax, lambda n: range(1, n), True, budget)
    if status == "ok":
        return ClassificationVerdict("nerve_like", dmax)
    if status == "fail":
        return ClassificationVerdict("none", dmax, failure_witness=h)
    return ClassificationVerdict("none", dmax, multiplicity_witness=(h, pair))


@dataclass(frozen=True)
class LiftingSquare:
    """An unliftable square: ``top`` maps the generator's faces, ``bottom`` the simplex."""

    family: str
    dim: int
    missing_face: int | None
    top: tuple
    bottom: int

    def render(self, p: SimplicialMap) -> str:
        E, B = p.source, p.target
        n = self.dim
        tops = ", ".join("." if y is None else E.ids[n - 1][y] for y in self.top)
        gen = f"dDelta^{n}" if self.missing_face is None else f"Lambda^{n}_{self.missing_face}"
        return f"{gen} -> ({tops}) over {B.ids[n][self.bottom]}"


FAMILIES = ("boundaries", "inner_horns", "all_horns")


def has_rlp(p: SimplicialMap, family: str, dmax: int, budget: Budget | None = None) -> Verdict:
    """Right lifting property of ``p`` against a generating family up to ``dmax``.

    ``family`` is ``boundaries`` (dDelta^n -> Delta^n, n >= 0), ``inner_horns``
    or ``all_horns``.  The witness of a failure is a :class:`LiftingSquare`.
    """
    if family not in FAMILIES:
        raise ValueError(f"unknown generator family {family!r}")
    E, B = p.source, p.target
    if dmax > p.dim:
        raise ValueError(f"dmax={dmax} above the levels of the map ({p.dim})")
    for n in range(0 if family == "boundaries" else 1, dmax + 1):
        if family == "boundaries":
            skips: list = [None]
        elif family == "inner_horns":
            skips = list(range(1, n))
        else:
            skips = list(range(n + 1))
        fibres: dict[int, list[int]] = {}
        if n >= 1:
            for y, b in enumerate(p.table[n - 1]):
                fibres.setdefault(b, []).append(y)
        for skip in skips:
            table = E.face_lookup(n) if skip is None else E.horn_lookup(n, skip)
            for b in range(B.size(n)):
                tick(budget)
                if n == 0:
                    if not any(p.table[0][e] == b for e in range(E.size(0))):
                        return Verdict(False, LiftingSquare(family, 0, None, (), b), "no vertex over bottom", dmax)
                    continue
                allowed = [fibres.get(B.faces[n][b][k], []) for k in range(n + 1)]
                for top in iter_compatible_tuples(E, n, skip, allowed, budget):
                    key = top if skip is None else tuple(y for y in top if y is not None)
                    if not any(p.table[n][e] == b for e in table.get(key, ())):
                        return Verdict(False, LiftingSquare(family, n, skip, top, b), "no diagonal", dmax)
    return Verdict(True, None, f"lifts against {family} up to dim {dmax}", dmax)


def is_surjective_up_to(p: SimplicialMap, d: int) -> bool:
    return all(len(set(p.table[n])) == p.target.size(n) for n in range(d + 1))
