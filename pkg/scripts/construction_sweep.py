#!/usr/bin/env python3
"""Build secure codes across a random-network corpus at every feasible security
level, verify each one, and summarize field sizes and outcomes.

Usage: python scripts/construction_sweep.py [--count 60] [--seed 20000]
"""

import argparse
import collections
import time

from snfc import c_min, construct, verify
from snfc.corpus import corpus
from snfc.errors import RateInfeasible


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=60)
    ap.add_argument("--seed", type=int, default=20_000)
    ap.add_argument("--cap", type=int, default=2048, help="exhaustive-check state cap")
    args = ap.parse_args()

    t0 = time.monotonic()
    by_field = collections.Counter()
    built = infeasible = failures = exhaustive_runs = 0
    for net in corpus(args.count, base_seed=args.seed):
        cm = c_min(net)
        for r in range(cm + 1):
            try:
                code = construct(net, r, seed=args.seed)
            except RateInfeasible:
                infeasible += 1
                continue
            built += 1
            by_field[code.field.spec_string()] += 1
            report = verify(code, net, cap=args.cap, fast=r >= 3)
            if report.secure_exhaustive is not None:
                exhaustive_runs += 1
            if not report.all_passed:
                failures += 1
                print(f"FAILURE at r={r}: {report.to_dict()}")
    dt = time.monotonic() - t0
    print(f"built {built} codes ({infeasible} zero-rate requests) in {dt:.1f}s")
    print(f"fields used: {dict(sorted(by_field.items()))}")
    print(f"verification failures: {failures}; exhaustive check ran {exhaustive_runs} times")
    raise SystemExit(1 if failures else 0)


if __name__ == "__main__":
    main()
