#!/usr/bin/env python3
"""Sweep all weight chains up to given bounds and report how redundancy
splits across lengths, cross-checking the classified membership list.

Example:
    python3 scripts/chain_sweep.py --max-len 5 --max-weight 8 --jobs 4
"""

import argparse
import itertools
import sys
import time

from redlab.dualgraph import chain_graph
from redlab.redundancy import negative_part, redundant_points
from redlab.verify import verify_classification


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-len", type=int, default=5)
    ap.add_argument("--max-weight", type=int, default=8)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    t0 = time.monotonic()
    rep = verify_classification(args.max_len, args.max_weight, jobs=args.jobs)
    dt = time.monotonic() - t0
    print(f"chains checked:   {rep.chains_checked}")
    print(f"with redundant:   {rep.chains_redundant}")
    print(f"without:          {rep.chains_checked - rep.chains_redundant}")
    print(f"D graphs checked: {rep.d_checked}")
    print(f"bracket graphs:   {rep.brackets_checked}")
    print(f"elapsed:          {dt:.1f}s")
    if not rep.ok:
        for c in rep.counterexamples:
            print(f"COUNTEREXAMPLE {c}")
        return 2

    print()
    print("redundancy-free chains by length (the complete list):")
    for l in range(1, args.max_len + 1):
        free = []
        for ws in itertools.product(range(2, args.max_weight + 1), repeat=l):
            if not redundant_points(negative_part(chain_graph(ws))):
                free.append(ws)
        joined = "  ".join("[" + ",".join(map(str, ws)) + "]" for ws in free)
        print(f"  l={l}: {joined}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
