"""Command-line front end.

Exit codes: 0 success, 1 a property check failed, 2 usage error,
3 a resource guard was hit.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from collections import OrderedDict
from typing import Sequence

from cliqueideals import checks
from cliqueideals.bits import vertices_of
from cliqueideals.errors import SizeGuardError, UndefinedError, max_n
from cliqueideals.graphs import Graph, build_graph, complement
from cliqueideals.homology import FieldSpec, hochster_betti, reg_pd_from_table, reisner_cm_check
from cliqueideals.ideals import MonomialIdeal, alexander_dual, clique_ideal, independence_ideal
from cliqueideals.resolutions import (
    SearchLimitError,
    betti_from_linear_quotients,
    find_linear_quotients,
    path_betti_recursion,
)
from cliqueideals.shellings import (
    cycle_shelling,
    find_shelling,
    path_shelling,
    shelling_to_json,
    shelling_to_linear_quotients,
    verify_shelling,
)
from cliqueideals.simplicial import dimension_and_purity, stanley_reisner_complex

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _emit(args: argparse.Namespace, text: str, data: object) -> None:
    if args.output == "json":
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _field(args: argparse.Namespace) -> FieldSpec:
    try:
        return FieldSpec.parse(args.field)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _graph(args: argparse.Namespace) -> Graph:
    try:
        return build_graph(args.graph)
    except (ValueError, OSError) as exc:
        raise UsageError(str(exc)) from None


def _ideal(args: argparse.Namespace) -> MonomialIdeal:
    if args.t < 1:
        raise UsageError("--t must be at least 1")
    G = _graph(args)
    if args.kind == "clique":
        return clique_ideal(G, args.t)
    return independence_ideal(G, args.t)


def _nonzero_ideal(args: argparse.Namespace) -> MonomialIdeal:
    I = _ideal(args)
    if I.is_zero:
        raise UsageError(f"the ideal is (0); nothing to compute")
    return I


def cmd_ideal(args: argparse.Namespace) -> int:
    I = _ideal(args)
    _emit(args, str(I), I.to_json())
    return EXIT_OK


def cmd_dual(args: argparse.Namespace) -> int:
    I = _nonzero_ideal(args)
    D = alexander_dual(I)
    _emit(args, str(D), D.to_json())
    return EXIT_OK


def _table_text(name: str, table) -> str:
    qp = reg_pd_from_table(table, "quotient")
    lines = [
        f"[{name}]",
        table.render(),
        f"reg(I) = {table.reg}   pd(I) = {table.pd}",
        f"reg(R/I) = {qp.reg}   pd(R/I) = {qp.pd}",
    ]
    return "\n".join(lines)


_PATH_SPEC = re.compile(r"^\s*path:(\d+)\s*$")


def cmd_betti(args: argparse.Namespace) -> int:
    I = _nonzero_ideal(args)
    field = _field(args)
    wanted = ["oracle", "linear-quotients", "recursion"] if args.method == "all" else [args.method]
    path_match = _PATH_SPEC.match(args.graph)
    recursion_ok = args.kind == "independence" and path_match is not None
    if args.method == "recursion" and not recursion_ok:
        raise UsageError("the recursion method applies only to --kind independence on path:N")
    tables: OrderedDict = OrderedDict()
    notes = []
    for method in wanted:
        if method == "oracle":
            tables[method] = hochster_betti(I, field)
        elif method == "linear-quotients":
            L = find_linear_quotients(I)
            if L is None:
                if args.method != "all":
                    print(f"{I} has no order of linear quotients", file=sys.stderr)
                    return EXIT_FAIL
                notes.append("linear-quotients: no order exists")
                continue
            tables[method] = betti_from_linear_quotients(L)
        elif method == "recursion":
            if not recursion_ok:
                notes.append("recursion: not applicable")
                continue
            tables[method] = path_betti_recursion(int(path_match.group(1)), args.t)
    verdict = None
    if args.method == "all":
        vals = list(tables.values())
        verdict = "MATCH" if all(v == vals[0] for v in vals) else "MISMATCH"
    text = "\n\n".join(_table_text(k, v) for k, v in tables.items())
    if notes:
        text += "\n\n" + "\n".join(notes)
    if verdict:
        text += f"\n\nverdict: {verdict}"
    first = next(iter(tables.values()))
    data = {
        "ideal": I.to_json(),
        "field": str(field),
        "tables": {k: v.to_json() for k, v in tables.items()},
        "reg": first.reg,
        "pd": first.pd,
        "notes": notes,
    }
    if verdict:
        data["verdict"] = verdict
    _emit(args, text, data)
    return EXIT_FAIL if verdict == "MISMATCH" else EXIT_OK


def cmd_complex(args: argparse.Namespace) -> int:
    I = _ideal(args)
    D = stanley_reisner_complex(I)
    if D.is_void:
        _emit(args, "<void> (unit ideal)", {"n": D.n, "facets": [], "void": True})
        return EXIT_OK
    dp = dimension_and_purity(D)
    text = f"{D}\ndim = {dp.dim}   pure = {'yes' if dp.pure else 'no'}"
    data = D.to_json() | {"dim": dp.dim, "pure": dp.pure}
    _emit(args, text, data)
    return EXIT_OK


_COMPLEMENT_FAMILY = re.compile(r"^\s*complement:(path|cycle):(\d+)\s*$")


def cmd_shelling(args: argparse.Namespace) -> int:
    I = _nonzero_ideal(args)
    D = stanley_reisner_complex(I)
    fam = _COMPLEMENT_FAMILY.match(args.graph)
    source = "search"
    if args.kind == "clique" and fam:
        n = int(fam.group(2))
        order = path_shelling(n, args.t) if fam.group(1) == "path" else cycle_shelling(n, args.t)
        source = f"{fam.group(1)}_shelling"
    else:
        try:
            order = find_shelling(D)
        except ValueError as exc:
            print(str(exc), file=sys.stderr)
            return EXIT_GUARD
    if order is None:
        _emit(args, f"{D} is not shellable", {"shellable": False})
        return EXIT_FAIL
    ok = verify_shelling(D, order)
    data = shelling_to_json(D.n, order) | {"source": source, "verified": ok}
    lines = [
        " < ".join("{" + ",".join(map(str, vertices_of(F))) + "}" for F in order),
        f"source: {source}   verified: {'yes' if ok else 'no'}",
    ]
    if args.certificate and ok and all(F != (1 << D.n) - 1 for F in order):
        L = shelling_to_linear_quotients(D, order)
        data["linear_quotients"] = L.to_json()
        lines.append(f"dual linear quotients: {L}")
    _emit(args, "\n".join(lines), data)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_cm(args: argparse.Namespace) -> int:
    I = _ideal(args)
    field = _field(args)
    D = stanley_reisner_complex(I)
    if D.is_void:
        raise UsageError("the unit ideal has no Stanley-Reisner complex")
    cm = reisner_cm_check(D, field)
    _emit(
        args,
        f"R/I Cohen-Macaulay over {field}: {'yes' if cm else 'no'}",
        {"ideal": I.to_json(), "field": str(field), "cohen_macaulay": cm},
    )
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    if args.n_max > max_n():
        raise SizeGuardError(f"--n-max {args.n_max} exceeds the guard n <= {max_n()}")
    field = _field(args)
    if args.suite == "path":
        outcomes = checks.path_suite(args.n_max, args.t_max, field)
    elif args.suite == "cycle":
        outcomes = checks.cycle_suite(args.n_max, args.t_max, field)
    elif args.suite == "chordal":
        outcomes = checks.chordal_suite(args.count, args.seed, min(args.n_max, 9))
    else:
        outcomes = checks.duality_suite(args.n_max, field)
    tally: dict[str, list[int]] = {}
    failures = []
    for o in outcomes:
        passed, total = tally.setdefault(o.prop, [0, 0])
        tally[o.prop] = [passed + o.ok, total + 1]
        if not o.ok:
            failures.append(o)
    lines = [f"suite {args.suite}"]
    for prop in sorted(tally):
        p, t = tally[prop]
        lines.append(f"  {'PASS' if p == t else 'FAIL'} {p}/{t}  {prop}")
    for o in failures:
        lines.append(f"  failed: {o.prop} @ {o.case}: predicted {o.predicted}, observed {o.observed}")
    data = {
        "suite": args.suite,
        "properties": {k: {"passed": v[0], "total": v[1]} for k, v in sorted(tally.items())},
        "failures": [{"property": o.prop, "case": o.case} for o in failures],
    }
    _emit(args, "\n".join(lines), data)
    return EXIT_FAIL if failures else EXIT_OK


def cmd_reproduce(args: argparse.Namespace) -> int:
    if args.n_max > max_n():
        raise SizeGuardError(f"--n-max {args.n_max} exceeds the guard n <= {max_n()}")
    rows = checks.reproduce_rows(args.n_max, args.t_max)
    bad = [r for r in rows if not r.ok]
    text = "\n".join(str(r) for r in rows) + f"\n\n{len(rows) - len(bad)}/{len(rows)} rows agree"
    data = [
        {
            "family": r.family,
            "n": r.n,
            "t": r.t,
            "statement": r.statement,
            "predicted": r.predicted,
            "observed": r.observed,
            "ok": r.ok,
        }
        for r in rows
    ]
    _emit(args, text, data)
    return EXIT_FAIL if bad else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cil", description="t-clique and t-independence ideals of graphs"
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=["text", "json"], default="text")
    common.add_argument("--field", default="2", help="2, p:<prime> or 0 (rationals)")

    ideal_args = argparse.ArgumentParser(add_help=False)
    ideal_args.add_argument("--graph", required=True, help="path:5, cycle:6, complement:path:5, file:g.json, ...")
    ideal_args.add_argument("--t", type=int, required=True)
    ideal_args.add_argument("--kind", choices=["clique", "independence"], default="clique")

    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("ideal", parents=[common, ideal_args], help="print K_t(G) or J_t(G)")
    p.set_defaults(func=cmd_ideal)
    p = sub.add_parser("dual", parents=[common, ideal_args], help="Alexander dual of the ideal")
    p.set_defaults(func=cmd_dual)
    p = sub.add_parser("betti", parents=[common, ideal_args], help="graded Betti numbers")
    p.add_argument("--method", choices=["oracle", "linear-quotients", "recursion", "all"], default="oracle")
    p.set_defaults(func=cmd_betti)
    p = sub.add_parser("complex", parents=[common, ideal_args], help="Stanley-Reisner complex")
    p.set_defaults(func=cmd_complex)
    p = sub.add_parser("shelling", parents=[common, ideal_args], help="shelling certificate")
    p.add_argument("--certificate", action="store_true", help="also emit the dual linear-quotient order")
    p.set_defaults(func=cmd_shelling)
    p = sub.add_parser("cm", parents=[common, ideal_args], help="Reisner Cohen-Macaulay test")
    p.set_defaults(func=cmd_cm)
    p = sub.add_parser("check", parents=[common], help="run a cross-validation suite")
    p.add_argument("--suite", choices=sorted(checks.SUITES), required=True)
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--t-max", type=int, default=3)
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--seed", type=int, default=1)
    p.set_defaults(func=cmd_check)
    p = sub.add_parser("reproduce", parents=[common], help="closed forms vs oracle, one row each")
    p.add_argument("--n-max", type=int, default=9)
    p.add_argument("--t-max", type=int, default=4)
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SizeGuardError, SearchLimitError) as exc:
        print(f"resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except UndefinedError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
