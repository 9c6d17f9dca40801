#!/usr/bin/env python3
"""Reproduce the headline logical-error-rate comparison at eps = 0.1.

Runs the paired three-variant comparison on the mixed-boundary d=4 and d=8
codes and the hole d=4 code, and writes one CSV (schema identical to the
`irmwpm simulate` command).  Trial counts are sized for a desk machine;
increase --trials for tighter intervals.
"""

import argparse
import sys

from irmwpm import Variant, build_hole_with_distance, build_mixed_boundary
from irmwpm.sim import run_trials, write_csv


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=20_000)
    ap.add_argument("--seed", type=int, default=20240)
    ap.add_argument("--out", default="error_rates.csv")
    args = ap.parse_args(argv)

    points = [build_mixed_boundary(4), build_mixed_boundary(8),
              build_hole_with_distance(4)]
    variants = (Variant.PLAIN, Variant.ONE_REWEIGHT, Variant.FULL)
    table = []
    for code in points:
        print(f"running {code.kind.value} d={code.d} "
              f"({args.trials} trials)...", file=sys.stderr)
        table.append(run_trials(code, 0.1, args.trials, args.seed, variants))

    with open(args.out, "w", encoding="utf-8", newline="") as f:
        write_csv(f, table)
    print(f"wrote {args.out}", file=sys.stderr)


if __name__ == "__main__":
    main()
