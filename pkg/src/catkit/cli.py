"""
Command-line frontend.

Subcommands: hecke, dcm, dyck, coxeter, repmin, verify-all, export.
JSON reports are schema-stable: sorted keys, a version/config envelope with
the seed recorded, and no timing data, so identical configurations produce
byte-identical output.  verify-all exits nonzero on any failing check and
serializes the first counterexample to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from . import boolmat as bm
from . import coxeter as cx
from . import dcm
from . import dyck
from . import hecke
from . import permutations as pm
from . import repmin as rm
from . import verify


def _env_cap(default: int = 1_000_000) -> int:
    raw = os.environ.get("CATKIT_CAP")
    return int(raw) if raw else default


def _emit(payload: dict, args) -> None:
    report = {
        "version": __version__,
        "config": {
            "subcommand": args.command,
            "seed": getattr(args, "seed", 0),
            "cap": getattr(args, "cap", None),
        },
        "result": payload,
    }
    json.dump(report, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")


def _perm_strs(perms) -> list[str]:
    return sorted(pm.format_perm(w) for w in perms)


def _cmd_hecke(args) -> int:
    n = args.n
    if args.mul:
        a, b = (pm.parse_perm(t) for t in args.mul)
        _emit({"product": pm.format_perm(hecke.mul(a, b))}, args)
    elif args.ideal:
        w = pm.parse_perm(args.ideal)
        _emit({"ideal": _perm_strs(hecke.bruhat_ideal(w))}, args)
    elif args.idempotents:
        if n is None:
            raise SystemExit("--idempotents requires --n")
        _emit({"idempotents": _perm_strs(hecke.idempotents(n))}, args)
    elif args.fold:
        i, text = args.fold
        part = hecke.parse_partition(text)
        _emit({"folded": hecke.format_partition(hecke.fold(int(i), part))},
              args)
    else:
        raise SystemExit("no hecke action requested")
    return 0


def _cmd_dcm(args) -> int:
    n = args.n
    action = args.action
    if action == "psi":
        w = pm.parse_perm(args.argument)
        _emit({"matrix": bm.to_row_strings(dcm.dc_of_perm(w))}, args)
    elif action == "fiber":
        x = bm.parse_matrix(args.argument)
        report = dcm.fiber_analysis(x)
        _emit({
            "fiber": _perm_strs(dcm.fiber(x)),
            "tau": pm.format_perm(report.tau),
            "maximal": _perm_strs(report.maximal),
            "convex": report.convex,
        }, args)
    elif action == "count":
        if n is None:
            raise SystemExit("count requires --n")
        cap = args.cap or int(os.environ.get("CATKIT_CAP",
                                             dcm.DEFAULT_DEGREE_CAP))
        _emit({"size": len(dcm.dc_monoid(n, degree_cap=cap))}, args)
    elif action == "self-dual":
        if n is None:
            raise SystemExit("self-dual requires --n")
        _emit({"self_dual": dcm.self_dual_count(n),
               "motzkin": dcm.motzkin_number(n)}, args)
    elif action == "verify-presentation":
        if n is None:
            raise SystemExit("verify-presentation requires --n")
        guard = args.cap if args.cap else dcm.DEFAULT_WORD_GUARD
        report = dcm.verify_presentation(n, word_guard=guard)
        _emit({"presented_size": report.presented_size,
               "matches": report.matches, "stable": report.stable}, args)
    else:
        raise SystemExit(f"unknown dcm action {action!r}")
    return 0


def _cmd_dyck(args) -> int:
    action = args.action
    if action == "derivative":
        _emit({"derivative": dyck.kreweras_derivative(args.args[0])}, args)
    elif action == "admissible":
        p1, p2 = args.args
        _emit({"admissible": dyck.is_admissible(p1, p2)}, args)
    elif action == "prec":
        a, b = (pm.parse_perm(t) for t in args.args)
        _emit({"leq": dyck.factor_order_leq(a, b)}, args)
    elif action == "path":
        alpha = pm.parse_perm(args.args[0])
        _emit({"path": dyck.map_to_path(alpha)}, args)
    elif action == "map":
        _emit({"map": pm.format_perm(dyck.path_to_map(args.args[0]))}, args)
    else:
        raise SystemExit(f"unknown dyck action {action!r}")
    return 0


def _parse_J(text: str, sys_: cx.CoxeterSystem) -> frozenset[int]:
    if not text:
        return frozenset()
    out = set()
    for token in text.split(","):
        token = token.strip().lstrip("s")
        out.add(int(token) - 1)
    if any(not 0 <= s < sys_.rank for s in out):
        raise SystemExit("generator index out of range in --J")
    return frozenset(out)


def _build_system(args) -> cx.CoxeterSystem:
    cap = args.cap if args.cap else _env_cap(10_000)
    if args.type:
        return cx.from_type_string(args.type, cap=cap)
    if args.gens:
        with open(args.gens) as fh:
            gens = [tuple(int(v) for v in line.split())
                    for line in fh if line.strip()]
        matrix = None
        if args.matrix:
            with open(args.matrix) as fh:
                matrix = [[int(v) for v in line.split()]
                          for line in fh if line.strip()]
        return cx.coxeter_system(gens, matrix, cap=cap, name="custom")
    raise SystemExit("need --type or --gens")


def _cmd_coxeter(args) -> int:
    sys_ = _build_system(args)
    if args.quotient:
        J = _parse_J(args.J or "", sys_)
        if args.quotient == "catalan":
            table = cx.catalan_quotient(sys_, J)
        else:
            table = cx.double_catalan_quotient(sys_, J)
        if args.dot:
            sys.stdout.write(table.right_cayley_dot() + "\n")
        else:
            _emit({"quotient": args.quotient, "J": sorted(J),
                   "table": table.to_json_dict()}, args)
    else:
        _emit({
            "type": sys_.name,
            "rank": sys_.rank,
            "order": sys_.order,
            "longest_length": sys_.length[sys_.longest],
            "vertex_count": cx.vertex_count(sys_),
            "coxeter_matrix": [list(row) for row in sys_.matrix],
        }, args)
    return 0


def _cmd_repmin(args) -> int:
    if args.dc:
        _emit(rm.dc_min_dim(args.dc), args)
        return 0
    if args.type:
        name = args.type
        if args.n and len(name) == 1:
            name = f"{name}{args.n}"
        sys_ = cx.from_type_string(name)
        report = rm.min_dim_report(sys_, p=args.mod)
        socles = {}
        for s in range(sys_.rank):
            check = rm.simple_socle_check(sys_, s, p=args.mod)
            socles[f"s{s + 1}"] = {
                "dimension": check["dimension"],
                "type": [f"s{t + 1}" for t in check["type"]],
                "ok": check["ok"],
                "basis": [[str(x) for x in vec]
                          for vecs in check["report"].values()
                          for vec in vecs],
            }
        report["socles"] = socles
        _emit(report, args)
        return 0
    raise SystemExit("need --type or --dc")


def _cmd_verify_all(args) -> int:
    report = verify.run_verify_all(
        n_max=args.n_max, seed=args.seed, jobs=args.jobs,
        include_n5_presentation=args.presentation_n5)
    _emit(report, args)
    if not report["passed"]:
        for name, res in sorted(report["checks"].items()):
            if not res["passed"]:
                json.dump({"check": name,
                           "counterexample": res["counterexample"]},
                          sys.stderr, sort_keys=True)
                sys.stderr.write("\n")
        return 1
    return 0


def _cmd_export(args) -> int:
    n = args.n
    if args.what == "dc":
        table = dcm.dc_monoid(n)
        labels = lambda x: "|".join(bm.to_row_strings(x))
    elif args.what == "hecke":
        table = hecke.hecke_monoid(n)
        labels = pm.format_perm
    elif args.what == "catalan":
        gens = [pm.ltr_maxima(pm.simple_transposition(i, n))
                for i in range(1, n)]
        from .monoid import generate_monoid
        table = generate_monoid(gens, pm.compose_map, pm.identity(n))
        labels = pm.format_perm
    else:
        raise SystemExit(f"unknown export target {args.what!r}")
    if args.dot:
        sys.stdout.write(table.right_cayley_dot(element_repr=labels) + "\n")
    else:
        _emit({"table": table.to_json_dict(element_repr=labels)}, args)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catkit",
        description="0-Hecke monoids, double Catalan monoids, Dyck paths, "
                    "and effective representation dimensions")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", default=True,
                       help="JSON output (default)")
        p.add_argument("--cap", type=int, default=None,
                       help="element or word cap override")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("hecke", help="products, ideals, foldings")
    p.add_argument("--n", type=int)
    p.add_argument("--mul", nargs=2, metavar=("A", "B"))
    p.add_argument("--ideal", metavar="W")
    p.add_argument("--idempotents", action="store_true")
    p.add_argument("--fold", nargs=2, metavar=("I", "F"))
    common(p)
    p.set_defaults(func=_cmd_hecke)

    p = sub.add_parser("dcm", help="double Catalan monoid")
    p.add_argument("--n", type=int)
    p.add_argument("action", choices=["psi", "fiber", "count", "self-dual",
                                      "verify-presentation"])
    p.add_argument("argument", nargs="?")
    common(p)
    p.set_defaults(func=_cmd_dcm)

    p = sub.add_parser("dyck", help="Dyck path operations")
    p.add_argument("action", choices=["derivative", "admissible", "prec",
                                      "path", "map"])
    p.add_argument("args", nargs="+")
    common(p)
    p.set_defaults(func=_cmd_dyck)

    p = sub.add_parser("coxeter", help="finite Coxeter systems and quotients")
    p.add_argument("--type", help="A4, B3, I2:6 ...")
    p.add_argument("--gens", help="file of generator permutations")
    p.add_argument("--matrix", help="file with the Coxeter matrix")
    p.add_argument("--quotient", choices=["catalan", "double"])
    p.add_argument("--J", help="comma-separated generator list, e.g. s1,s3")
    p.add_argument("--dot", action="store_true")
    common(p)
    p.set_defaults(func=_cmd_coxeter)

    p = sub.add_parser("repmin", help="effective representation dimensions")
    p.add_argument("--type", help="Coxeter type, e.g. A3 or B3")
    p.add_argument("--n", type=int, help="rank when --type is a bare family")
    p.add_argument("--dc", type=int, metavar="N",
                   help="check the double Catalan module of degree N")
    p.add_argument("--mod", type=int, default=None,
                   help="rerun socles modulo a prime")
    common(p)
    p.set_defaults(func=_cmd_repmin)

    p = sub.add_parser("verify-all", help="run every verification suite")
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--presentation-n5", action="store_true",
                   help="include the degree-5 presentation check (slow)")
    common(p)
    p.set_defaults(func=_cmd_verify_all)

    p = sub.add_parser("export", help="closure tables and Cayley graphs")
    p.add_argument("--what", choices=["dc", "hecke", "catalan"],
                   required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dot", action="store_true")
    common(p)
    p.set_defaults(func=_cmd_export)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
