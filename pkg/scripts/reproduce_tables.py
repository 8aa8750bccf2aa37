#!/usr/bin/env python3
"""Recompute the width-count table and both limit tables.

    python scripts/reproduce_tables.py [--n-cap-e 400] [--n-cap-p 256]
"""

import argparse
import time

from bpfact import enumeration as en


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n-cap-e", type=int, default=400)
    ap.add_argument("--n-cap-p", type=int, default=256)
    args = ap.parse_args()

    print("IB_2(n, t), 10 <= n <= 20, 1 <= t <= 10")
    print("n\t" + "\t".join(f"t={t}" for t in range(1, 11)))
    for n in range(10, 21):
        print(f"{n}\t" + "\t".join(str(en.ib_count(2, n, t)) for t in range(1, 11)))

    print("\nk\tE_k\tn_used\tlast_delta\tconverged")
    for k in (2, 3, 4, 5, 6, 7, 8, 9, 10, 100):
        t0 = time.perf_counter()
        est = en.estimate_E_limit(k, "1e-4", args.n_cap_e)
        print(f"{k}\t{est.value}\t{est.n_used}\t{est.last_delta:.2e}\t{est.converged}\t({time.perf_counter() - t0:.2f}s)")

    print("\nk\tP_k\tn_used\tlast_delta\tconverged")
    for k in (2, 3, 4, 5, 6, 7, 8, 9, 10, 100):
        est = en.estimate_P_limit(k, "1e-5", args.n_cap_p)
        print(f"{k}\t{est.value}\t{est.n_used}\t{est.last_delta:.2e}\t{est.converged}")


if __name__ == "__main__":
    main()
