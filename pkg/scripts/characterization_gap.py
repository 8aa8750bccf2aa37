#!/usr/bin/env python3
"""Where equal smallest/largest factorizations escape the structural characterization.

Sweeps all words, groups the mismatches by the shape of the largest
factorization, and reruns with the cube-centre case admitted.

    python scripts/characterization_gap.py --k 2 --n-max 14
"""

import argparse
from collections import Counter

from bpfact.factorization import largest_bpf
from bpfact.oracle import theorem5_sweep


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, default=2, help="at most 10")
    ap.add_argument("--n-max", type=int, default=14)
    args = ap.parse_args()

    rep = theorem5_sweep(args.k, args.n_max)
    print(f"literal statement: {len(rep.mismatches)} mismatches in {rep.elapsed:.1f}s")
    by_m = Counter()
    for p, same, _ in rep.mismatches:
        f = largest_bpf(tuple(map(int, p["word"])))
        assert same and f.block(1) == f.center
        by_m[f.m] += 1
    print("all have coinciding factorizations with w_1 == w_0; count by m:", dict(sorted(by_m.items())))
    for p, _, _ in rep.mismatches[:6]:
        print("  ", p["word"], largest_bpf(tuple(map(int, p["word"]))).render())

    amended = theorem5_sweep(args.k, args.n_max, cube_centre=True)
    print(f"with cube-centre case: {len(amended.mismatches)} mismatches")
    for p, _, _ in amended.mismatches[:6]:
        print("  ", p["word"])


if __name__ == "__main__":
    main()
