#!/usr/bin/env python3
"""Print the discrepancy vectors of the classified log terminal families:
the two chain tables, D shapes for a few arms, and the fifteen bracket
star families evaluated over a range of central weights.

Example:
    python3 scripts/family_report.py --b-max 4
"""

import argparse
import sys

from redlab.dualgraph import chain_graph, d_graph, discrepancies
from redlab.families import (BRACKET_FAMILIES, CHAINS_WITH_REDUNDANT_POINT,
                             CHAINS_WITHOUT_REDUNDANT_POINT)
from redlab.linalg import format_rational
from redlab.redundancy import negative_part, redundant_points


def fmt_vec(values) -> str:
    return "(" + ", ".join(format_rational(x) for x in values) + ")"


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--b-max", type=int, default=4)
    args = ap.parse_args()

    print("chains without a redundant point:")
    for ws, vals in CHAINS_WITHOUT_REDUNDANT_POINT.items():
        print(f"  [{','.join(map(str, ws))}]  a = {fmt_vec(vals)}")
    print("  [n]  a = ((n-2)/n) for n >= 2")
    print()
    print("minimal chains with a redundant point:")
    for ws, vals in CHAINS_WITH_REDUNDANT_POINT.items():
        pts = redundant_points(negative_part(chain_graph(ws)))
        locs = ", ".join(f"E{p.location.i}.E{p.location.j} mult "
                         f"{format_rational(p.mult)}" for p in pts)
        print(f"  [{','.join(map(str, ws))}]  a = {fmt_vec(vals)}  [{locs}]")
    print()
    print(f"D shapes (center weight b, arm), b = 2..{args.b_max}:")
    for arm in ([2], [3], [2, 2, 3], [2, 5]):
        for b in range(2, args.b_max + 1):
            vals = discrepancies(d_graph(b, arm)).as_tuple()
            print(f"  b={b} arm=[{','.join(map(str, arm))}]  a = {fmt_vec(vals)}")
    print()
    print(f"bracket star families, b = 2..{args.b_max}:")
    for fam in BRACKET_FAMILIES:
        for b in range(2, args.b_max + 1):
            print(f"  {fam.name} at b={b}  a = {fmt_vec(fam.closed_form(b))}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
