"""Command-line front end.

Exit codes: 0 every check passed, 1 a check failed, 2 parse or validation
error, 3 budget exceeded, 4 precondition unmet.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from ._common import Budget, BudgetExceeded, PreconditionError
from .homotopy import homotopy_category
from .io import (
    ParseError,
    category_to_doc,
    dump_document,
    load_document,
    load_presentation,
    sset_from_doc,
    sset_to_doc,
)
from .joins import (
    colimit_candidates,
    coslice_under,
    empty_diagram,
    is_final,
    is_initial,
    join,
    limit_candidates,
    slice_over,
    vertex_diagram,
)
from .lifting import check_kan, check_quasicategory, check_unique_inner_fillers
from .monoidal import MatrixPresentation, is_commutative_monoid, is_monoid, validate_monoidal, validate_symmetric
from .opfib import (
    OpfibTotal,
    check_algebra_section,
    check_opfibration,
    extract_tensor,
    fiber_counts,
    is_initial_algebra,
    monoid_from_section,
    section_from_monoid,
)
from .sset import FiniteSimplicialSet, SimplicialMap, find_isomorphism, from_nondegenerate, simplex_map, standard_simplex
from .symmetric import (
    check_commutative_algebra_section,
    commutative_section_from_monoid,
    extract_symmetric,
    find_right_dual,
)

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_BUDGET, EXIT_PRECONDITION = 0, 1, 2, 3, 4


@dataclass
class RunReport:
    command: str
    verdicts: list = field(default_factory=list)  # (name, passed, witness)
    info: list = field(default_factory=list)  # (key, value)
    budget_events: list = field(default_factory=list)
    error: str = ""
    exit_code: int = EXIT_OK
    json_output: bool = False

    def check(self, name: str, passed: bool, witness: str = "") -> None:
        self.verdicts.append((name, bool(passed), witness))

    def note(self, key: str, value) -> None:
        self.info.append((key, value))

    def finish(self) -> "RunReport":
        if self.exit_code == EXIT_OK and not all(p for _, p, _ in self.verdicts):
            self.exit_code = EXIT_FAIL
        return self

    def text(self) -> str:
        lines = [f"command: {self.command}"]
        for key, value in self.info:
            lines.append(f"{key}: {value}")
        for name, passed, witness in self.verdicts:
            line = f"{name}: {'pass' if passed else 'fail'}"
            lines.append(f"{line} ({witness})" if witness else line)
        for ev in self.budget_events:
            lines.append(f"budget exceeded: {ev}")
        if self.error:
            lines.append(f"error: {self.error}")
        lines.append(f"exit: {self.exit_code}")
        return "\n".join(lines) + "\n"

    def as_json(self) -> str:
        return json.dumps(
            {
                "command": self.command,
                "verdicts": [{"check": n, "pass": p, "witness": w} for n, p, w in self.verdicts],
                "info": [[k, v] for k, v in self.info],
                "budget_events": self.budget_events,
                "error": self.error,
                "exit_code": self.exit_code,
            },
            indent=2,
            default=str,
        ) + "\n"


# ---------------------------------------------------------------------------
# helpers


def _budget(args) -> Budget:
    return Budget(max_nodes=args.budget, max_level_size=args.max_level)


def _load_sset(path: str, budget: Budget) -> FiniteSimplicialSet:
    X = sset_from_doc(load_document(path), name=Path(path).stem)
    for n in range(X.dim + 1):
        budget.check_size(f"{X.name} level {n}", X.size(n))
    return X


def _write(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)


def parse_diagram(C: FiniteSimplicialSet, text: str) -> SimplicialMap:
    """``empty``, ``vertex:<id>``, ``vertices:<id>,<id>,...`` or ``simplex:<id>``."""
    kind, _, rest = text.partition(":")
    if kind == "empty":
        return empty_diagram(C)
    try:
        if kind == "vertex":
            return vertex_diagram(C, rest)
        if kind == "vertices":
            names = [v for v in rest.split(",") if v]
            src = from_nondegenerate(0, [names], {}, name="disc")
            return SimplicialMap(src, C, (tuple(C.index(0, v) for v in names),))
        if kind == "simplex":
            for n in range(C.dim + 1):
                if rest in C.ids[n]:
                    return simplex_map(C, n, C.index(n, rest), standard_simplex(n, n))
            raise KeyError(rest)
    except (KeyError, ValueError) as e:
        raise ParseError(f"diagram {text!r}: unknown simplex {e}") from e
    raise ParseError(f"unknown diagram {text!r}")


def parse_morphism(M, text: str):
    if isinstance(M, MatrixPresentation):
        try:
            head, body = text.split(":")
            m, n = (int(x) for x in head.split("->"))
            rows = tuple(tuple(int(c) for c in r) for r in body.split("/")) if m and n else tuple(() for _ in range(n))
        except ValueError as e:
            raise ParseError(f"bad matrix {text!r}; expected m->n:row/row/...") from e
        if len(rows) != n or any(len(r) != m for r in rows):
            raise ParseError(f"matrix {text!r} does not have shape {n}x{m}")
        return (m, n, rows)
    if text not in M.category.src:
        raise ParseError(f"unknown morphism {text!r}")
    return text


def parse_object(M, text: str):
    if isinstance(M, MatrixPresentation):
        try:
            return int(text)
        except ValueError as e:
            raise ParseError(f"bad object {text!r}") from e
    if text not in M.category.objects:
        raise ParseError(f"unknown object {text!r}")
    return text


def _letters(M, args):
    if args.objects:
        return [parse_object(M, x) for x in args.objects.split(",")]
    if isinstance(M, MatrixPresentation):
        return [0, 1]
    return None


# ---------------------------------------------------------------------------
# commands


def cmd_classify(args, rep: RunReport) -> None:
    budget = _budget(args)
    X = _load_sset(args.path, budget)
    rep.check("valid", True)
    if args.dmax > X.dim:
        raise PreconditionError(f"dmax={args.dmax} above truncation {X.dim}")
    q = check_quasicategory(X, args.dmax, budget)
    k = check_kan(X, args.dmax, budget)
    u = check_unique_inner_fillers(X, args.dmax, budget) if q else q
    kind = u if u else (k if k else q)
    rep.note("sizes", list(X.sizes()))
    rep.note("classification", kind.render(X) if kind else "none")
    rep.note("kan", "yes" if k else f"no, {k.render(X)}")
    rep.note("nerve_like", "yes" if u else ("no" if not q else f"no, {u.render(X)}"))
    rep.check("quasicategory", bool(q), "" if q else q.render(X))


def cmd_ho(args, rep: RunReport) -> None:
    budget = _budget(args)
    X = _load_sset(args.path, budget)
    ho = homotopy_category(X, args.dmax, budget=budget)
    C = ho.category
    rep.note("objects", len(C.objects))
    rep.note("morphisms", len(C.morphisms))
    rep.note("classes", ", ".join(C.morphisms))
    rep.check("category", C.validate().ok)
    _write(args, dump_document(category_to_doc(C)))


def cmd_join(args, rep: RunReport) -> None:
    budget = _budget(args)
    K = _load_sset(args.left, budget)
    M = _load_sset(args.right, budget)
    J = join(K, M, args.dmax)
    rep.note("sizes", list(J.sizes()))
    if args.compare:
        D = _load_sset(args.compare, budget)
        iso = find_isomorphism(J, D, min(J.dim, D.dim), budget)
        rep.check(f"isomorphic to {Path(args.compare).stem}", iso is not None)
    _write(args, dump_document(sset_to_doc(J)))


def cmd_slice(args, rep: RunReport) -> None:
    budget = _budget(args)
    C = _load_sset(args.path, budget)
    p = parse_diagram(C, args.diagram)
    under = args.coslice
    S = (coslice_under if under else slice_over)(C, p, args.dmax, budget)
    rep.note("sizes", list(S.space.sizes()))
    if args.diagram.startswith("vertex:"):
        v = (is_initial if under else is_final)(C, args.diagram.split(":", 1)[1], args.dmax, budget)
        rep.check("initial" if under else "final", v.holds, "" if v else _render_witness(v.witness, S))
    _write(args, dump_document(sset_to_doc(S.space)))


def _render_witness(w, S) -> str:
    if hasattr(w, "render"):
        try:
            return w.render(S.projection)
        except Exception:  # noqa: BLE001 - best-effort rendering
            return str(w)
    return str(w)


def cmd_limits(args, rep: RunReport) -> None:
    budget = _budget(args)
    C = _load_sset(args.path, budget)
    p = parse_diagram(C, args.diagram)
    cands = (colimit_candidates if args.colimits else limit_candidates)(C, p, args.dmax, budget)
    rep.note("candidates", ", ".join(cands.vertices) or "none")
    rep.note("apexes", ", ".join(cands.apexes) or "none")
    rep.check("colimit exists" if args.colimits else "limit exists", bool(cands.vertices))


def cmd_monoidal(args, rep: RunReport) -> None:
    budget = _budget(args)
    M = load_presentation(args.path, args.dmax)
    symmetric = args.symmetric
    if symmetric and not getattr(M, "symmetric", False):
        raise PreconditionError("--symmetric needs a presentation with a braiding")
    letters = _letters(M, args)
    sub = args.subcommand
    rep.command = f"monoidal {sub}"
    rep.note("presentation", M.name)
    if sub == "validate":
        v = (validate_symmetric if symmetric else validate_monoidal)(M, letters, budget)
        rep.check("symmetric monoidal" if symmetric else "monoidal", v.ok, "; ".join(v.lines()[:5]))
        return
    v = (validate_symmetric if symmetric else validate_monoidal)(M, letters, budget, limit=1)
    if not v.ok:
        raise PreconditionError("presentation fails validation: " + "; ".join(v.lines()))
    kind = "fin" if symmetric else "delta_op"
    if sub == "build-opfib":
        p = OpfibTotal(M, args.nmax, kind, letters, budget)
        for n in range(args.nmax + 1):
            objs, mors = fiber_counts(p, n)
            rep.note(f"fiber {n}", f"{objs} objects, {mors} morphisms")
        ok = check_opfibration(p, budget=budget)
        rep.check("opfibration", ok.holds, ok.detail if not ok else "")
    elif sub == "extract":
        p = OpfibTotal(M, args.nmax, kind, letters, budget)
        ex = (extract_symmetric if symmetric else extract_tensor)(p, M)
        rep.note("extracted pentagon/triangle", "ok" if ex.report.ok else "; ".join(ex.report.lines()[:3]))
        word = "symmetric monoidally" if symmetric else "monoidally"
        rep.note(f"{word} isomorphic", "yes" if ex.isomorphic else "no")
        rep.check("round trip", ex.isomorphic, "; ".join(ex.mismatches[:5]))
    elif sub == "algebra-check":
        if not (args.object and args.mu and args.eta):
            raise ParseError("algebra-check needs --object, --mu and --eta")
        A, mu, eta = parse_object(M, args.object), parse_morphism(M, args.mu), parse_morphism(M, args.eta)
        bad = (is_commutative_monoid if symmetric else is_monoid)(M, A, mu, eta)
        rep.check("commutative monoid" if symmetric else "monoid", not bad, "; ".join(bad))
        if bad:
            return
        p = OpfibTotal(M, args.nmax, kind, letters, budget)
        if A not in p.letters:
            raise PreconditionError(f"object {A} is not among the letters {list(p.letters)}")
        if symmetric:
            S = commutative_section_from_monoid(p, A, mu, eta)
            v = check_commutative_algebra_section(S, budget)
        else:
            S = section_from_monoid(p, A, mu, eta)
            v = check_algebra_section(S, budget)
        rep.check("section", v.holds, v.detail)
        back = monoid_from_section(S)
        rep.check("round trip", (back.A, back.mu, back.eta) == (A, mu, eta) and back.ok)
        rep.note("initial", "yes" if is_initial_algebra(S) else "no")
    elif sub == "dual-find":
        if not args.object:
            raise ParseError("dual-find needs --object")
        X = parse_object(M, args.object)
        ws = find_right_dual(M, X, letters if letters is not None and not isinstance(M, MatrixPresentation) else None, budget)
        for k, w in enumerate(ws):
            rep.note(f"witness {k}", f"Y={w.Y} eta={M.render(w.eta)} eps={M.render(w.eps)}")
        rep.check("right dual", bool(ws))
    else:  # pragma: no cover - argparse restricts choices
        raise ParseError(f"unknown subcommand {sub!r}")


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dmax", type=int, default=3, help="truncation / check dimension (default 3)")
    common.add_argument("--nmax", type=int, default=3, help="base truncation for opfibrations (default 3)")
    common.add_argument("--budget", type=int, default=10**6, help="search node budget (default 1e6)")
    common.add_argument("--max-level", type=int, default=200, help="largest level size scanned (default 200)")
    common.add_argument("--symmetric", action="store_true", help="use the Fin encoding")
    common.add_argument("--out", help="write the constructed object here")
    common.add_argument("--json", action="store_true", help="machine-readable report")

    parser = argparse.ArgumentParser(prog="qcat", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("classify", parents=[common], help="horn-filling classification")
    p.add_argument("path")
    p = subs.add_parser("ho", parents=[common], help="homotopy category")
    p.add_argument("path")
    p = subs.add_parser("join", parents=[common], help="join of two simplicial sets")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--compare", help="check the join is isomorphic to this file")
    p = subs.add_parser("slice", parents=[common], help="slice or coslice over a diagram")
    p.add_argument("path")
    p.add_argument("--diagram", default="empty")
    p.add_argument("--coslice", action="store_true")
    p = subs.add_parser("limits", parents=[common], help="limit or colimit candidates")
    p.add_argument("path")
    p.add_argument("--diagram", default="empty")
    p.add_argument("--colimits", action="store_true")
    p = subs.add_parser("monoidal", parents=[common], help="monoidal presentations")
    p.add_argument("subcommand", choices=["validate", "build-opfib", "extract", "algebra-check", "dual-find"])
    p.add_argument("path", help="presentation file or builtin:<name>")
    p.add_argument("--object")
    p.add_argument("--mu")
    p.add_argument("--eta")
    p.add_argument("--objects", help="comma-separated letters for the total category")
    return parser


COMMANDS = {
    "classify": cmd_classify,
    "ho": cmd_ho,
    "join": cmd_join,
    "slice": cmd_slice,
    "limits": cmd_limits,
    "monoidal": cmd_monoidal,
}


def run(argv: list[str] | None = None) -> RunReport:
    parser = build_parser()
    args = parser.parse_args(argv)
    rep = RunReport(args.command)
    try:
        COMMANDS[args.command](args, rep)
    except ParseError as e:
        rep.error, rep.exit_code = str(e), EXIT_PARSE
    except BudgetExceeded as e:
        rep.budget_events.append(str(e))
        rep.exit_code = EXIT_BUDGET
    except (PreconditionError, ValueError) as e:
        rep.error, rep.exit_code = str(e), EXIT_PRECONDITION
    rep.json_output = args.json
    return rep.finish()


def main(argv: list[str] | None = None) -> int:
    rep = run(argv)
    sys.stdout.write(rep.as_json() if rep.json_output else rep.text())
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
