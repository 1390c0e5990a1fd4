#!/usr/bin/env python3
"""Walk through the two stock lattice constructions: decompose -K, locate
the redundant point, blow it up, and decompose again to watch the nef
part pull back unchanged.

Example:
    python3 scripts/lattice_demo.py --m-max 6
"""

import argparse
import sys

from redlab.lattice import (fixture_hirzebruch, fixture_two_lines, is_big,
                            lattice_blow_up, pull_back, zariski_decompose)
from redlab.linalg import format_rational


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--m-max", type=int, default=6)
    args = ap.parse_args()

    print("plane blown up along two lines (m, n points):")
    for m in range(4, args.m_max + 1):
        for n in range(4, m + 1):
            lat, mk, curves = fixture_two_lines(m, n)
            dec = zariski_decompose(lat, mk, curves)
            support = dict(dec.support)
            mult = support["l1"] + support["l2"]
            print(f"  (m,n)=({m},{n}): N = {format_rational(support['l1'])} l1 "
                  f"+ {format_rational(support['l2'])} l2, "
                  f"mult at l1.l2 = {format_rational(mult)} "
                  f"({'redundant' if mult >= 1 else 'not redundant'}), "
                  f"P.P = {format_rational(lat.pair(dec.P, dec.P))}, "
                  f"big = {is_big(lat, dec.P)}")
            new_lat, new_curves, e = lattice_blow_up(lat, ["l1", "l2"], curves)
            dec_up = zariski_decompose(new_lat, pull_back(mk) - e,
                                       new_curves + [("e", e)])
            pulled = dec_up.P == pull_back(dec.P)
            ecoeff = dict(dec_up.support).get("e", 0)
            print(f"      after blow-up: rank {new_lat.rank}, "
                  f"P pulled back: {pulled}, "
                  f"e-coefficient = {format_rational(ecoeff)} (= mult - 1)")

    print()
    print("blown-up ruled surface (n=2, k=3 fibers, multiplicities 2,3,7):")
    lat, mk, curves = fixture_hirzebruch(2, 3, [2, 3, 7])
    dec = zariski_decompose(lat, mk, curves)
    for name, coeff in dec.support:
        print(f"  N[{name}] = {format_rational(coeff)}")
    sigma = dict(dec.support)["sigma"]
    print(f"  section coefficient {format_rational(sigma)} > 1: every point "
          f"of the section is redundant")
    print(f"  P.P = {format_rational(lat.pair(dec.P, dec.P))}, "
          f"big = {is_big(lat, dec.P)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
