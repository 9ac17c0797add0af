"""Text formats: simplicial sets, finite categories and monoidal presentations.

Documents are YAML (JSON is accepted as a subset).  Loaders raise
:class:`ParseError` on malformed or partial input.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Any

import yaml

from .category import FiniteCategory
from .monoidal import (
    MonoidalPresentation,
    SymmetricMonoidalPresentation,
    categorical_group,
    cubic_cocycle,
    discrete_group_monoidal,
    matrix_category,
    max_poset_monoidal,
    symmetric_categorical_group,
    trivial_monoidal,
    with_associator,
)
from .opfib import FinMorphism, fin
from .sset import FiniteSimplicialSet, from_nondegenerate, nondegenerate_presentation, validate


class ParseError(ValueError):
    """Input could not be parsed or failed structural validation."""


def load_document(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise ParseError(f"{path}: {e.strerror}") from e
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as e:
        raise ParseError(f"{path}: {e}") from e
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: expected a mapping at top level")
    return doc


def dump_document(doc: Any) -> str:
    return yaml.safe_dump(doc, sort_keys=False, default_flow_style=None)


def _need(doc: dict, key: str, kind=None):
    if key not in doc:
        raise ParseError(f"missing field {key!r}")
    val = doc[key]
    if kind is not None and not isinstance(val, kind):
        raise ParseError(f"field {key!r} must be a {kind.__name__}")
    return val


# ---------------------------------------------------------------------------
# simplicial sets

_DEGEN = re.compile(r"s(\d+)")


def parse_face(entry: Any) -> tuple[tuple[int, ...], str]:
    """``"s1 s0 x"`` -> ``((1, 0), "x")``; the word must be strictly decreasing."""
    if not isinstance(entry, (str, int)):
        raise ParseError(f"bad face entry {entry!r}")
    tokens = str(entry).split()
    if not tokens:
        raise ParseError("empty face entry")
    word = []
    for tok in tokens[:-1]:
        m = _DEGEN.fullmatch(tok)
        if not m:
            raise ParseError(f"bad degeneracy {tok!r} in {entry!r}")
        word.append(int(m.group(1)))
    if any(a <= b for a, b in zip(word, word[1:])):
        raise ParseError(f"degeneracy word in {entry!r} is not in normal form")
    return tuple(word), tokens[-1]


def sset_from_doc(doc: dict, name: str = "") -> FiniteSimplicialSet:
    dim = _need(doc, "dim", int)
    raw = _need(doc, "simplices")
    if isinstance(raw, dict):
        top = max((int(k) for k in raw), default=-1)
        levels = [[str(x) for x in raw.get(n, raw.get(str(n), [])) or []] for n in range(top + 1)]
    elif isinstance(raw, list):
        levels = [[str(x) for x in (lv or [])] for lv in raw]
    else:
        raise ParseError("simplices must be a list of levels or a level mapping")
    faces_raw = doc.get("faces") or {}
    if not isinstance(faces_raw, dict):
        raise ParseError("faces must be a mapping")
    faces = {}
    for sid, entries in faces_raw.items():
        if not isinstance(entries, list):
            raise ParseError(f"faces of {sid!r} must be a list")
        faces[str(sid)] = [parse_face(e) for e in entries]
    try:
        X = from_nondegenerate(dim, levels, faces, name=doc.get("name", name))
    except (ValueError, KeyError, IndexError) as e:
        raise ParseError(str(e)) from e
    rep = validate(X, limit=3)
    if not rep.ok:
        raise ParseError("simplicial identities fail: " + "; ".join(rep.lines()))
    return X


def sset_to_doc(X: FiniteSimplicialSet) -> dict:
    simplices, faces = nondegenerate_presentation(X)
    return {
        "dim": X.dim,
        "simplices": {n: list(level) for n, level in enumerate(simplices)},
        "faces": {
            sid: [" ".join([f"s{j}" for j in word] + [base]) for word, base in fs]
            for sid, fs in faces.items()
        },
    }


# ---------------------------------------------------------------------------
# categories


def category_from_doc(doc: dict, name: str = "") -> FiniteCategory:
    objects = [str(a) for a in _need(doc, "objects", list)]
    mors_raw = _need(doc, "morphisms", dict)
    morphisms = {}
    for m, st in mors_raw.items():
        if not isinstance(st, dict) or "src" not in st or "tgt" not in st:
            raise ParseError(f"morphism {m!r} needs src and tgt")
        morphisms[str(m)] = (str(st["src"]), str(st["tgt"]))
    ids_raw = doc.get("identities") or {a: f"id_{a}" for a in objects}
    identities = {str(a): str(i) for a, i in ids_raw.items()}
    for a in objects:
        if a not in identities:
            raise ParseError(f"object {a!r} has no identity")
        morphisms.setdefault(identities[a], (a, a))
    for m, (s, t) in morphisms.items():
        if s not in objects or t not in objects:
            raise ParseError(f"morphism {m!r} has an unknown end")
    compose = {}
    for row in doc.get("compose") or []:
        if not isinstance(row, list) or len(row) != 3:
            raise ParseError(f"compose rows are [g, f, g_after_f], got {row!r}")
        g, f, h = (str(x) for x in row)
        compose[(g, f)] = h
    for f, (s, t) in morphisms.items():
        compose.setdefault((identities[t], f), f)
        compose.setdefault((f, identities[s]), f)
    C = FiniteCategory(objects, morphisms, compose, identities, name=doc.get("name", name))
    rep = C.validate()
    if not rep.ok:
        raise ParseError("not a category: " + "; ".join(map(str, rep.failures[:3])))
    return C


def category_to_doc(C: FiniteCategory) -> dict:
    ids = set(C.identities.values())
    return {
        "objects": list(C.objects),
        "morphisms": {m: {"src": C.src[m], "tgt": C.tgt[m]} for m in C.morphisms},
        "identities": dict(C.identities),
        "compose": [
            [g, f, h] for (g, f), h in sorted(C.table.items()) if g not in ids and f not in ids
        ],
    }


# ---------------------------------------------------------------------------
# monoidal presentations


def _table(doc: dict, key: str, arity: int) -> dict:
    out = {}
    for row in _need(doc, key, list):
        if not isinstance(row, list) or len(row) != arity + 1:
            raise ParseError(f"rows of {key!r} need {arity + 1} entries, got {row!r}")
        out[tuple(str(x) for x in row[:arity])] = str(row[arity])
    return out


def monoidal_from_doc(doc: dict, name: str = "") -> MonoidalPresentation:
    C = category_from_doc(doc, name)
    objs, mors = list(C.objects), list(C.morphisms)
    tobj = _table(doc, "tensor_obj", 2)
    tmor = _table(doc, "tensor_mor", 2)
    assoc = _table(doc, "associator", 3)
    unit = str(_need(doc, "unit"))
    unitors = _need(doc, "unitors", dict)
    lam = {str(a): str(m) for a, m in (unitors.get("left") or {}).items()}
    rho = {str(a): str(m) for a, m in (unitors.get("right") or {}).items()}
    _total("tensor_obj", tobj, [(a, b) for a in objs for b in objs])
    _total("tensor_mor", tmor, [(f, g) for f in mors for g in mors])
    _total("associator", assoc, [(a, b, c) for a in objs for b in objs for c in objs])
    _total("unitors.left", lam, objs)
    _total("unitors.right", rho, objs)
    if unit not in objs:
        raise ParseError(f"unit {unit!r} is not an object")
    for v in tobj.values():
        if v not in objs:
            raise ParseError(f"tensor_obj value {v!r} is not an object")
    for key, table in (("tensor_mor", tmor), ("associator", assoc), ("unitors.left", lam), ("unitors.right", rho)):
        for v in table.values():
            if v not in C.src:
                raise ParseError(f"{key} value {v!r} is not a morphism")
    nm = doc.get("name", name)
    if "braiding" in doc:
        braid = _table(doc, "braiding", 2)
        _total("braiding", braid, [(a, b) for a in objs for b in objs])
        for v in braid.values():
            if v not in C.src:
                raise ParseError(f"braiding value {v!r} is not a morphism")
        return SymmetricMonoidalPresentation(C, tobj, tmor, unit, assoc, lam, rho, name=nm, braiding=braid)
    return MonoidalPresentation(C, tobj, tmor, unit, assoc, lam, rho, name=nm)


def _total(key: str, table: dict, domain: list) -> None:
    missing = [d for d in domain if d not in table]
    if missing:
        raise ParseError(f"table {key!r} is partial: missing {missing[0]!r}")
    extra = set(table) - set(domain)
    if extra:
        raise ParseError(f"table {key!r} has entries outside the category: {sorted(extra)[0]!r}")


def monoidal_to_doc(M: MonoidalPresentation) -> dict:
    doc = category_to_doc(M.category)
    doc["tensor_obj"] = [[a, b, c] for (a, b), c in M.tensor_obj.items()]
    doc["tensor_mor"] = [[f, g, h] for (f, g), h in M.tensor_mor.items()]
    doc["unit"] = M.unit
    doc["associator"] = [[a, b, c, m] for (a, b, c), m in M.associator.items()]
    doc["unitors"] = {"left": dict(M.left_unitor), "right": dict(M.right_unitor)}
    if M.symmetric:
        doc["braiding"] = [[a, b, m] for (a, b), m in M.braiding.items()]
    return doc


def _corrupt_pentagon():
    M = categorical_group(name="categorical C2 (corrupted)")
    return with_associator(M, "1", "1", "0", "-0")


BUILTINS = {
    "trivial": trivial_monoidal,
    "discrete-c2": lambda: discrete_group_monoidal(2),
    "discrete-c3": lambda: discrete_group_monoidal(3),
    "categorical-c2": symmetric_categorical_group,
    "categorical-c2-twisted": lambda: categorical_group(cubic_cocycle()),
    "categorical-c2-corrupted": _corrupt_pentagon,
    "max-poset": max_poset_monoidal,
}


def load_presentation(source: str, dmax: int = 2):
    """A file path, or ``builtin:<name>`` (``builtin:matrix`` is the F_2 matrix category)."""
    if source.startswith("builtin:"):
        key = source.split(":", 1)[1]
        if key == "matrix":
            return matrix_category(2, dmax)
        if key not in BUILTINS:
            raise ParseError(f"unknown builtin {key!r}; known: matrix, {', '.join(BUILTINS)}")
        return BUILTINS[key]()
    return monoidal_from_doc(load_document(source), name=Path(source).stem)


def fin_to_list(a: FinMorphism) -> list:
    return ["*" if x == 0 else x for x in a.values[1:]]


def fin_from_list(values: list, codomain: int | None = None) -> FinMorphism:
    try:
        return fin(values, codomain)
    except (ValueError, TypeError) as e:
        raise ParseError(f"bad pointed map {values!r}: {e}") from e
