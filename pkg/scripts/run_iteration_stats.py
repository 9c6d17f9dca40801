#!/usr/bin/env python3
"""Distribution of extra reweighting iterations for the full variant.

Decodes depolarizing samples on a mixed-boundary code and prints the
histogram of extra iterations together with the mean and the fraction of
trials that stop without any extra round.
"""

import argparse
import sys

from irmwpm import Variant, build_mixed_boundary
from irmwpm.sim import HIST_BUCKETS, run_trials


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--distance", type=int, default=8)
    ap.add_argument("--epsilon", type=float, default=0.1)
    ap.add_argument("--trials", type=int, default=10_000)
    ap.add_argument("--seed", type=int, default=20240)
    args = ap.parse_args(argv)

    code = build_mixed_boundary(args.distance)
    print(f"running mixed d={args.distance} eps={args.epsilon} "
          f"({args.trials} trials)...", file=sys.stderr)
    stats = run_trials(code, args.epsilon, args.trials, args.seed,
                       (Variant.FULL,))
    vs = stats.per_variant[Variant.FULL]
    print(f"trials            {vs.trials}")
    print(f"logical failures  {vs.failures} (rate {vs.rate:.4f})")
    print(f"mean extra iters  {vs.mean_extra_iters:.4f}")
    for b in HIST_BUCKETS:
        count = vs.histogram[b]
        print(f"  extra = {b:>2}: {count:>7}  ({count / vs.trials:.1%})")


if __name__ == "__main__":
    main()
