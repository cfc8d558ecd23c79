"""Command-line front end: deterministic JSON on stdout, notes on stderr.

Exit codes: 0 success, 1 computation-level failure (an axiom check that
found violations), 2 usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import beck, diagram, linalg, quandle
from .alexander import burau, extended_module, knot_determinant, presentation_matrix
from .diagram import PDError, parse_braid, parse_pd
from .rings import format_poly


class _UsageError(Exception):
    pass


def _load_diagram(args) -> diagram.Diagram:
    picked = [x for x in (args.pd, args.braid, args.catalog) if x is not None]
    if len(picked) != 1:
        raise _UsageError("exactly one of --pd/--braid/--catalog is required")
    if args.pd is not None:
        return diagram.resolve_crossings(parse_pd(args.pd))
    if args.braid is not None:
        w = parse_braid(args.braid, args.strands)
        return diagram.braid_closure(w)
    try:
        return diagram.catalog_get(args.catalog)
    except KeyError as exc:
        raise _UsageError(str(exc.args[0])) from exc


def _load_quandle(spec: str) -> quandle.FiniteQuandle:
    if spec.startswith("dihedral:"):
        return quandle.dihedral(int(spec.split(":")[1]))
    if spec.startswith("alexander:"):
        _, n, t = spec.split(":")
        return quandle.alexander_quandle(int(n), int(t))
    if spec.startswith("trivial:"):
        return quandle.trivial_quandle(int(spec.split(":")[1]))
    with open(spec, "r", encoding="utf-8") as fh:
        return quandle.FiniteQuandle.from_json(json.load(fh))


def _load_module(spec: str, q: quandle.FiniteQuandle) -> beck.QuandleModule:
    if spec.startswith("constant:"):
        _, n, t = spec.split(":")
        return beck.constant_module(q, int(n), int(t))
    with open(spec, "r", encoding="utf-8") as fh:
        return beck.QuandleModule.from_json(json.load(fh), base=q)


def _group_json(g: linalg.FiniteAbGroup) -> dict:
    return {"invariant_factors": list(g.invariant_factors),
            "free_rank": g.free_rank}


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")


def _cmd_alexander(args) -> int:
    d = _load_diagram(args)
    m = presentation_matrix(d)
    em = extended_module(d)
    delta = em.e1
    _emit({
        "matrix": m.to_json(),
        "alexander_polynomial": format_poly(delta),
        "invariant_factors": [format_poly(f) for f in em.invariant_factors],
        "free_rank": em.free_rank,
        "determinant": knot_determinant(d),
    })
    return 0


def _cmd_color(args) -> int:
    d = _load_diagram(args)
    q = _load_quandle(args.quandle)
    cols = quandle.colorings(d, q)
    _emit({
        "count": len(cols),
        "colorings": [list(c.assignment) for c in cols],
    })
    return 0


def _cmd_derive(args) -> int:
    d = _load_diagram(args)
    q = _load_quandle(args.quandle)
    m = _load_module(args.module, q)
    report = beck.check_module(m)
    if not report.passes:
        raise _UsageError(f"module fails axioms: {report.violations[0]}")
    if args.spectrum:
        spec = beck.derivation_spectrum(d, q, m)
        counted: list = []
        for g in spec:
            entry = _group_json(g)
            if counted and counted[-1]["group"] == entry:
                counted[-1]["multiplicity"] += 1
            else:
                counted.append({"group": entry, "multiplicity": 1})
        _emit({"colorings": len(spec), "spectrum": counted})
        return 0
    groups = []
    for c in quandle.colorings(d, q):
        der = beck.derivations(d, c, m)
        groups.append({
            "coloring": list(c.assignment),
            "group": _group_json(der.group),
        })
    _emit({"derivations": groups})
    return 0


def _cmd_burau(args) -> int:
    w = parse_braid(args.braid, args.strands)
    _emit({"strands": w.strands, "matrix": burau(w).to_json()})
    return 0


def _cmd_check(args) -> int:
    with open(args.file, "r", encoding="utf-8") as fh:
        data = json.load(fh)
    if args.kind == "quandle":
        report = quandle.check_axioms(data["table"])
        _emit({
            "is_rack": report.is_rack,
            "is_quandle": report.is_quandle,
            "is_kei": report.is_kei,
            "violations": [list(v) for v in report.violations],
        })
        return 0 if report.ok else 1
    base = quandle.FiniteQuandle.from_json(data["base"])
    groups = [linalg.FiniteAbGroup.from_orders(g) for g in data["groups"]]
    mod = beck.QuandleModule.build(base, groups, data["eps"], data["alpha"])
    report = beck.check_module(mod)
    _emit({
        "passes": report.passes,
        "violations": [[v[0], list(v[1])] for v in report.violations],
    })
    return 0 if report.passes else 1


def _cmd_catalog(args) -> int:
    if args.action != "list":
        raise _UsageError("catalog supports: list")
    knots = []
    for name in diagram.catalog_names():
        entry = diagram.catalog_entry(name)
        knots.append({
            "name": name,
            "crossings": entry["crossings"],
            "determinant": entry["determinant"],
        })
    _emit({"knots": knots})
    return 0


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="quandlekit",
        description="exact knot invariants from quandle presentations")
    sub = p.add_subparsers(dest="command", required=True)

    def add_diagram_flags(sp):
        sp.add_argument("--pd", help="PD code, e.g. 'X[1,4,2,5] ...'")
        sp.add_argument("--braid", help="braid word, e.g. 's1 s2^-1' or 'aB'")
        sp.add_argument("--strands", type=int, default=None)
        sp.add_argument("--catalog", help="bundled knot name")

    sp = sub.add_parser("alexander", help="extended-module invariants")
    add_diagram_flags(sp)
    sp.set_defaults(func=_cmd_alexander)

    sp = sub.add_parser("color", help="quandle colorings")
    add_diagram_flags(sp)
    sp.add_argument("--quandle", required=True,
                    help="dihedral:n | alexander:n:t | trivial:n | file.json")
    sp.set_defaults(func=_cmd_color)

    sp = sub.add_parser("derive", help="derivation groups over colorings")
    add_diagram_flags(sp)
    sp.add_argument("--quandle", required=True)
    sp.add_argument("--module", required=True,
                    help="constant:n:t | file.json")
    sp.add_argument("--spectrum", action="store_true",
                    help="aggregate into the sorted multiset")
    sp.set_defaults(func=_cmd_derive)

    sp = sub.add_parser("burau", help="unreduced Burau matrix of a braid")
    sp.add_argument("--braid", required=True)
    sp.add_argument("--strands", type=int, default=None)
    sp.set_defaults(func=_cmd_burau)

    sp = sub.add_parser("check", help="axiom reports")
    sp.add_argument("kind", choices=["quandle", "module"])
    sp.add_argument("--file", required=True)
    sp.set_defaults(func=_cmd_check)

    sp = sub.add_parser("catalog", help="bundled diagrams")
    sp.add_argument("action", choices=["list"])
    sp.set_defaults(func=_cmd_catalog)
    return p


def run(argv) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and 2
    try:
        return args.func(args)
    except (_UsageError, PDError, ValueError, OSError, KeyError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
