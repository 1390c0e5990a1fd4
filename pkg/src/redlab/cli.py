"""Command-line frontend.

All numeric output is exact; fractions print in lowest terms as ``p/q``.
``--decimal`` appends 6-digit approximations, clearly marked.  Exit codes:
0 success, 1 invalid input, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .dualgraph import (GraphError, TypeA, TypeBracket, TypeD, classify,
                        discrepancies, graph_from_json, recognize_shape)
from .hjcf import BadFraction, HJString, hj_eval, hj_expand
from .lattice import (BadParameters, NotPseudoEffective, fixture_hirzebruch,
                      fixture_two_lines, is_big, lattice_from_json,
                      lattice_to_json, zariski_decompose)
from .linalg import format_rational
from .redundancy import (IntersectionPoint, enumerate_sequences,
                         negative_part, redundant_points)
from .verify import (check_bracket_families, check_chain_tables,
                     check_d_closed_forms, verify_classification)


def _fmt(x: Fraction, decimal: bool) -> str:
    s = format_rational(x)
    if decimal and x.denominator != 1:
        s += f" (~{float(x):.6f})"
    return s


def _load_json(path: str) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def _load_graph(path: str):
    return graph_from_json(_load_json(path))


def _shape_text(shape) -> str:
    if isinstance(shape, TypeA):
        return f"TypeA {shape.string} (order {' '.join(map(str, shape.order))})"
    if isinstance(shape, TypeD):
        return (f"TypeD b={shape.b} arm {shape.arm} "
                f"(order {' '.join(map(str, shape.order))})")
    if isinstance(shape, TypeBracket):
        q, q1 = hj_eval(shape.arm1)
        q2, q21 = hj_eval(shape.arm2)
        return (f"TypeBracket <{shape.b};{q},{q1};{q2},{q21}> "
                f"(order {' '.join(map(str, shape.order))})")
    return "Other"


def _shape_json(shape) -> dict:
    if isinstance(shape, TypeA):
        return {"kind": "TypeA", "weights": list(shape.string.weights),
                "order": list(shape.order)}
    if isinstance(shape, TypeD):
        return {"kind": "TypeD", "b": shape.b, "arm": list(shape.arm.weights),
                "order": list(shape.order)}
    if isinstance(shape, TypeBracket):
        return {"kind": "TypeBracket", "b": shape.b,
                "arm1": list(shape.arm1.weights), "arm2": list(shape.arm2.weights),
                "order": list(shape.order)}
    return {"kind": "Other"}


def _location_json(loc) -> dict:
    if isinstance(loc, IntersectionPoint):
        return {"kind": "intersection", "curves": [loc.i, loc.j]}
    return {"kind": "generic", "curve": loc.curve}


def _location_text(loc) -> str:
    if isinstance(loc, IntersectionPoint):
        return f"intersection {loc.i} {loc.j}"
    return f"generic {loc.curve}"


def cmd_discrep(args) -> int:
    g = _load_graph(args.graph)
    d = discrepancies(g)
    if args.format == "json":
        print(json.dumps({"vertices": list(g.ids),
                          "discrepancies": [format_rational(x) for x in d.as_tuple()]}))
    else:
        print("vertices:", " ".join(str(v) for v in g.ids))
        print("a =", " ".join(_fmt(x, args.decimal) for x in d.as_tuple()))
    return 0


def cmd_classify(args) -> int:
    g = _load_graph(args.graph)
    cls = classify(discrepancies(g))
    shape = recognize_shape(g)
    if args.format == "json":
        print(json.dumps({"class": str(cls), "shape": _shape_json(shape)}))
    else:
        print(f"class = {cls}")
        print(f"shape = {_shape_text(shape)}")
    return 0


def cmd_redundant(args) -> int:
    g = _load_graph(args.graph)
    pts = redundant_points(negative_part(g))
    if args.format == "json":
        print(json.dumps({"points": [
            dict(_location_json(p.location), mult=format_rational(p.mult))
            for p in pts]}))
    else:
        if not pts:
            print("no redundant points")
        for p in pts:
            print(f"{_location_text(p.location)} mult = {_fmt(p.mult, args.decimal)}")
    return 0


def cmd_simulate(args) -> int:
    g = _load_graph(args.graph)
    report = enumerate_sequences(negative_part(g), args.max_depth)
    if args.format == "json":
        print(json.dumps({
            "unbounded": report.unbounded,
            "max_length": report.max_length,
            "reached_depth": report.reached_depth,
            "depth_bound": report.depth_bound,
            "hit_bound": report.hit_bound,
            "sequence_count": report.sequence_count,
            "m_values": [dict(_location_json(loc), m=m) for loc, m in report.m_values],
            "tree": [dict(_location_json(n.location), depth=n.depth,
                          mult=format_rational(n.mult)) for n in report.tree],
        }))
        return 0
    for node in report.tree:
        indent = "  " * (node.depth - 1)
        print(f"{indent}{_location_text(node.location)} "
              f"mult = {_fmt(node.mult, args.decimal)}")
    if report.unbounded:
        print(f"max length = unbounded "
              f"(chains certified to depth {report.reached_depth})")
    else:
        print(f"max length = {report.max_length}")
    if report.m_values:
        print("depth bounds M(p):")
        for loc, m in report.m_values:
            print(f"  {_location_text(loc)}: {m}")
    print(f"sequences enumerated: {report.sequence_count}")
    return 0


def cmd_hjcf(args) -> int:
    if args.mode == "eval":
        if not args.numbers:
            raise BadFraction("eval needs at least one weight")
        q, q1 = hj_eval(HJString(tuple(args.numbers)))
        if args.format == "json":
            print(json.dumps({"q": q, "q1": q1}))
        else:
            print(f"q/q1 = {q}/{q1}")
    else:
        if len(args.numbers) != 2:
            raise BadFraction("expand needs exactly two integers q q1")
        s = hj_expand(args.numbers[0], args.numbers[1])
        if args.format == "json":
            print(json.dumps({"weights": list(s.weights)}))
        else:
            print(f"string = {s}")
    return 0


def cmd_zariski(args) -> int:
    lat, divisor, curves = lattice_from_json(_load_json(args.lattice))
    dec = zariski_decompose(lat, divisor, curves)
    p2 = lat.pair(dec.P, dec.P)
    if args.format == "json":
        print(json.dumps({
            "basis": list(lat.basis_names),
            "P": [format_rational(x) for x in dec.P.coords],
            "N": [format_rational(x) for x in dec.N.coords],
            "support": [{"name": n, "coeff": format_rational(x)}
                        for n, x in dec.support],
            "P2": format_rational(p2),
            "big": is_big(lat, dec.P),
        }))
        return 0
    print("basis:", " ".join(lat.basis_names))
    print("P =", " ".join(_fmt(x, args.decimal) for x in dec.P.coords))
    print("N =", " ".join(_fmt(x, args.decimal) for x in dec.N.coords))
    if dec.support:
        print("support:", ", ".join(f"{n} = {_fmt(x, args.decimal)}"
                                    for n, x in dec.support))
    else:
        print("support: empty (divisor is nef)")
    print(f"P.P = {_fmt(p2, args.decimal)}")
    print(f"big = {'true' if is_big(lat, dec.P) else 'false'}")
    return 0


def cmd_fixture(args) -> int:
    if args.kind == "smn":
        if len(args.params) != 2:
            raise BadParameters("fixture smn needs two integers: m n")
        lat, divisor, curves = fixture_two_lines(args.params[0], args.params[1])
    else:
        if len(args.params) < 3:
            raise BadParameters("fixture hirzebruch needs: n k a1 ... ak")
        n, k = args.params[0], args.params[1]
        lat, divisor, curves = fixture_hirzebruch(n, k, args.params[2:])
    doc = lattice_to_json(lat, divisor, curves)
    text = json.dumps(doc, indent=None if args.format == "json" else 2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0


def cmd_verify_tables(args) -> int:
    results = [
        check_chain_tables(),
        check_bracket_families(2, 10),
        check_d_closed_forms(b_max=8, arm_len_max=3, weight_max=5),
    ]
    ok = all(r.ok for r in results)
    if args.format == "json":
        print(json.dumps({"ok": ok, "checks": [
            {"name": r.name, "checked": r.checked, "ok": r.ok,
             "failures": r.failures} for r in results]}))
    else:
        for r in results:
            print(r.summary())
            for f in r.failures:
                print(f"  FAIL {f}")
    return 0 if ok else 2


def cmd_enumerate_a(args) -> int:
    report = verify_classification(args.max_len, args.max_weight, jobs=args.jobs)
    if args.format == "json":
        print(json.dumps({
            "ok": report.ok,
            "chains_checked": report.chains_checked,
            "chains_redundant": report.chains_redundant,
            "d_checked": report.d_checked,
            "brackets_checked": report.brackets_checked,
            "counterexamples": report.counterexamples,
        }))
    else:
        print(f"chains checked: {report.chains_checked} "
              f"({report.chains_redundant} with a redundant point)")
        print(f"D graphs checked: {report.d_checked}")
        print(f"bracket graphs checked: {report.brackets_checked}")
        if report.ok:
            print("no counterexamples")
        else:
            for c in report.counterexamples:
                print(f"COUNTEREXAMPLE {c}")
    return 0 if report.ok else 2


def _default_jobs() -> int:
    env = os.environ.get("REDLAB_JOBS", "")
    try:
        return max(1, int(env))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text",
                        help="output format (default text)")
    common.add_argument("--decimal", action="store_true",
                        help="append approximate decimal values to fractions")

    p = argparse.ArgumentParser(
        prog="redlab",
        description="Exact discrepancies, redundant blow-ups and Zariski "
                    "decompositions for normal surface singularities.")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("discrep", parents=[common],
                        help="discrepancies of a dual graph")
    sp.add_argument("graph", help="graph JSON file")
    sp.set_defaults(func=cmd_discrep)

    sp = sub.add_parser("classify", parents=[common],
                        help="singularity class and recognized shape")
    sp.add_argument("graph")
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("redundant", parents=[common],
                        help="redundant points with multiplicities")
    sp.add_argument("graph")
    sp.set_defaults(func=cmd_redundant)

    sp = sub.add_parser("simulate", parents=[common],
                        help="enumerate chains of redundant blow-ups")
    sp.add_argument("graph")
    sp.add_argument("--max-depth", type=int, default=10)
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("hjcf", parents=[common],
                        help="continued fraction evaluate/expand")
    sp.add_argument("mode", choices=["eval", "expand"])
    sp.add_argument("numbers", type=int, nargs="+")
    sp.set_defaults(func=cmd_hjcf)

    sp = sub.add_parser("zariski", parents=[common],
                        help="Zariski decomposition from a lattice JSON file")
    sp.add_argument("lattice")
    sp.set_defaults(func=cmd_zariski)

    sp = sub.add_parser("fixture", parents=[common],
                        help="emit a lattice file for a stock construction")
    sp.add_argument("kind", choices=["smn", "hirzebruch"])
    sp.add_argument("params", type=int, nargs="+",
                    help="smn: m n; hirzebruch: n k a1 ... ak")
    sp.add_argument("-o", "--out", default=None, help="write to file instead of stdout")
    sp.set_defaults(func=cmd_fixture)

    sp = sub.add_parser("verify-tables", parents=[common],
                        help="check the built-in reference tables")
    sp.set_defaults(func=cmd_verify_tables)

    sp = sub.add_parser("enumerate-a", parents=[common],
                        help="exhaustive classification sweep")
    sp.add_argument("--max-len", type=int, required=True)
    sp.add_argument("--max-weight", type=int, required=True)
    sp.add_argument("--jobs", type=int, default=_default_jobs())
    sp.set_defaults(func=cmd_enumerate_a)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GraphError, BadFraction, BadParameters, NotPseudoEffective) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (OSError, json.JSONDecodeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
