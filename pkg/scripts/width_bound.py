#!/usr/bin/env python3
"""Compare IB_k(n, t) / k^n against k^(1 - t/2) and a length-choice-aware bound.

    python scripts/width_bound.py --k 2 --n-max 30
"""

import argparse
from math import comb

from bpfact import enumeration as en


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--k", type=int, default=2)
    ap.add_argument("--n-max", type=int, default=30)
    args = ap.parse_args()
    k = args.k

    worst = []
    for n in range(1, args.n_max + 1):
        for t in range(1, n + 1):
            c = en.ib_count(k, n, t)
            m = t // 2
            ratio = c / k**n / k ** (1 - t / 2)
            safe = c <= comb(n // 2, m) * k ** (n - m)
            worst.append((ratio, n, t, c, safe))
    worst.sort(reverse=True)
    print("ratio to k^(1-t/2)\tn\tt\tIB\tbinomial bound holds")
    for ratio, n, t, c, safe in worst[:15]:
        print(f"{ratio:.4f}\t{n}\t{t}\t{c}\t{safe}")
    print("violations:", sum(1 for r in worst if r[0] > 1), "of", len(worst))
    print("binomial bound failures:", sum(1 for r in worst if not r[4]))


if __name__ == "__main__":
    main()
