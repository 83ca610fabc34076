"""Command-line front end: repherd {info|check|ar-quiver|check-module|check-tilted}.

Exit codes for verdict-producing commands: 0 Holds, 1 Fails, 2 Degenerate,
3 Inconclusive, 4 error.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import io as rio
from .catalog import Budget, ar_quiver, enumerate_indecomposables
from .checks import (
    DEGENERATE,
    FAILS,
    HOLDS,
    INCONCLUSIVE,
    TiltingContext,
    check_module_conditions,
    check_representation_hereditary,
    check_tilted_sufficient,
    run_all_checks,
)
from .errors import BudgetExceeded, NotTilting, RepherdError
from .modules import indec_isomorphic, indecomposable_summands, injective_at, projective_at

_EXIT = {HOLDS: 0, FAILS: 1, DEGENERATE: 2, INCONCLUSIVE: 3}


def _budget(args) -> Budget:
    b = Budget()
    if getattr(args, "budget_modules", None):
        b.max_modules = args.budget_modules
    if getattr(args, "budget_dim", None):
        b.max_total_dim = args.budget_dim
    return b


def _emit(args, payload):
    blob = json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False)
    print(blob)
    if getattr(args, "json_out", None):
        rio.dump_json(args.json_out, payload)


def cmd_info(args) -> int:
    data = rio.load_json(args.algebra)
    alg = rio.algebra_from_dict(data)
    payload = {
        "tool_version": rio.TOOL_VERSION,
        "algebra_digest": alg.digest,
        "dimension": alg.dim,
        "path_basis_size": alg.dim,
        "vertex_count": alg.quiver.n_vertices,
        "arrow_count": alg.quiver.n_arrows,
        "field": alg.field.to_spec(),
        "length_bound": alg.length_bound,
    }
    _emit(args, payload)
    return 0


def _catalog_for(alg, budget):
    cached = rio.load_catalog_cache(alg)
    if cached is not None:
        return cached
    cat = enumerate_indecomposables(alg, budget)
    rio.save_catalog_cache(alg, cat)
    return cat


def cmd_check(args) -> int:
    alg = rio.load_algebra(args.algebra)
    budget = _budget(args)
    if args.suite == "tilted":
        if not args.tilting:
            print("error: --suite tilted needs --tilting FILE", file=sys.stderr)
            return 4
        return _run_tilted(args, alg, args.tilting, budget)
    cat = _catalog_for(alg, budget)
    if args.suite == "all":
        reports, cat = run_all_checks(alg, budget)
        main = reports[0]
    else:
        main = check_representation_hereditary(alg, catalog=cat)
        reports = [main]
    payload = rio.report_file(alg, reports, cat)
    _emit(args, payload)
    return _EXIT.get(main.verdict, 4)


def cmd_ar_quiver(args) -> int:
    alg = rio.load_algebra(args.algebra)
    cat = _catalog_for(alg, _budget(args))
    if not cat.complete:
        print("error: catalog incomplete at the given budget", file=sys.stderr)
        return 3
    arrows, tau = ar_quiver(cat)
    dot = emit_dot(cat, arrows)
    if args.dot_out:
        with open(args.dot_out, "w", encoding="utf-8") as fh:
            fh.write(dot)
    print(dot)
    return 0


def emit_dot(cat, arrows) -> str:
    lines = ["digraph ar_quiver {"]
    for node in cat.nodes:
        shape = "ellipse"
        peripheries = ""
        if node.proj_vertex is not None and node.inj_vertex is not None:
            shape, peripheries = "box", ", peripheries=2"
        elif node.proj_vertex is not None:
            shape = "box"
        elif node.inj_vertex is not None:
            shape = "diamond"
        lines.append(
            '  "%s" [label="%s dim=(%s)", shape=%s%s];'
            % (node.name, node.name, ",".join(str(d) for d in node.rep.dims), shape, peripheries)
        )
    for (i, j, mult) in sorted(arrows):
        lines.append('  "%s" -> "%s" [label="%d"];' % (cat.nodes[i].name, cat.nodes[j].name, mult))
    for i, node in enumerate(cat.nodes):
        if node.tau is not None:
            lines.append('  "%s" -> "%s" [style=dashed, arrowhead=vee];' % (node.name, cat.nodes[node.tau].name))
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_check_module(args) -> int:
    alg = rio.load_algebra(args.algebra)
    m = rio.load_module(alg, args.module)
    nv = alg.quiver.n_vertices
    add_list = [projective_at(alg, v) for v in range(nv)] + [injective_at(alg, v) for v in range(nv)]
    add_list = [x for x in add_list if not x.is_zero()]
    pieces = indecomposable_summands(m)
    outside = [p for p in pieces if not any(indec_isomorphic(p, x) for x in add_list)]
    if not outside:
        payload = {
            "tool_version": rio.TOOL_VERSION,
            "verdict": DEGENERATE,
            "notes": ["every indecomposable summand already lies in add(A + DA)"],
        }
        _emit(args, payload)
        return 2
    reports = [check_module_conditions(alg, p) for p in outside]
    verdict = HOLDS if all(r.verdict == HOLDS for r in reports) else FAILS
    payload = rio.report_file(alg, reports)
    payload["verdict"] = verdict
    _emit(args, payload)
    return _EXIT[verdict]


def _run_tilted(args, alg, tilting_path, budget) -> int:
    data = rio.load_json(tilting_path)
    summands = [rio.module_from_dict(alg, d) for d in data["summands"]]
    try:
        report = check_tilted_sufficient(TiltingContext(alg, summands), budget)
    except NotTilting as exc:
        print("error: not a tilting module: %s" % exc, file=sys.stderr)
        return 4
    except BudgetExceeded:
        print("error: catalog budget exceeded", file=sys.stderr)
        return 3
    payload = rio.report_file(alg, [report])
    _emit(args, payload)
    return _EXIT[report.verdict]


def cmd_check_tilted(args) -> int:
    alg = rio.load_algebra(args.algebra)
    return _run_tilted(args, alg, args.tilting, _budget(args))


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="repherd", description="Exact checks for representation-hereditary algebras")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="algebra dimensions and counts")
    p.add_argument("algebra")
    p.add_argument("--json", dest="json_out")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("check", help="run the verdict checks")
    p.add_argument("algebra")
    p.add_argument("--suite", choices=["main", "all", "tilted"], default="main")
    p.add_argument("--budget-modules", type=int)
    p.add_argument("--budget-dim", type=int)
    p.add_argument("--tilting", help="tilting summand file (for --suite tilted)")
    p.add_argument("--json", dest="json_out")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("ar-quiver", help="emit the AR quiver as DOT")
    p.add_argument("algebra")
    p.add_argument("--dot", dest="dot_out")
    p.add_argument("--budget-modules", type=int)
    p.add_argument("--budget-dim", type=int)
    p.set_defaults(func=cmd_ar_quiver)

    p = sub.add_parser("check-module", help="kernel/cokernel test for one module file")
    p.add_argument("algebra")
    p.add_argument("module")
    p.add_argument("--json", dest="json_out")
    p.set_defaults(func=cmd_check_module)

    p = sub.add_parser("check-tilted", help="tilted sufficiency over a hereditary algebra")
    p.add_argument("algebra")
    p.add_argument("tilting")
    p.add_argument("--budget-modules", type=int)
    p.add_argument("--budget-dim", type=int)
    p.add_argument("--json", dest="json_out")
    p.set_defaults(func=cmd_check_tilted)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (RepherdError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
